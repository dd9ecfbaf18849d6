"""
Hot loops for homomorphism search into symmetric groups.

Permutations of {0..k-1} are indexed by their position in lexicographic
order (index 0 is the identity).  ``mul[p, q]`` is the index of "p then
q", i.e. the map ``i -> q[p[i]]``.

A word is encoded as int32 letter codes ``2*g + (1 if inverse)`` with
0-based generator ``g``.  ``search`` walks image tuples in lexicographic
order and returns the accepted ones; a relator is checked as soon as all
of its generators are assigned, which prunes without reordering.
"""
from functools import lru_cache
from itertools import permutations

import numpy as np

from . import _accel

ACCEPT_ALL = 0
ACCEPT_NONTRIVIAL = 1  # word image is not the identity
ACCEPT_ORDER_AT_LEAST = 2  # order(word image) >= param
ACCEPT_ORDER_NOT_DIVIDING = 3  # order(word image) does not divide param

CHUNK_ROWS = 1 << 20


@lru_cache(maxsize=None)
def perm_tables(k: int):
    """Return ``(perms, mul, inv, order)`` for S_k."""
    perms = np.array(list(permutations(range(k))), dtype=np.int64).reshape(-1, k)
    N = perms.shape[0]
    weights = k ** np.arange(k - 1, -1, -1, dtype=np.int64)
    lookup = np.full(k**k, -1, dtype=np.int64)
    lookup[perms @ weights] = np.arange(N)
    # (p then q)[i] = q[p[i]]
    composed = perms[np.arange(N)[None, :, None], perms[:, None, :]]  # composed[p, q, i] = perms[q, perms[p, i]]
    mul = lookup[composed @ weights].astype(np.int32)
    ident = 0
    inv = np.argmax(mul == ident, axis=1).astype(np.int32)
    order = np.ones(N, dtype=np.int32)
    cur = np.arange(N, dtype=np.int32)
    while True:
        not_done = cur != ident
        if not not_done.any():
            break
        cur = np.where(not_done, mul[cur, np.arange(N)], cur)
        order += not_done
    for t in (perms, mul, inv, order):
        t.setflags(write=False)
    return perms, mul, inv, order


def encode(word):
    return np.array([2 * (abs(x) - 1) + (1 if x < 0 else 0) for x in word], dtype=np.int32)


def encode_relators(relators):
    codes = [encode(r) for r in relators]
    offsets = np.zeros(len(codes) + 1, dtype=np.int64)
    for i, c in enumerate(codes):
        offsets[i + 1] = offsets[i] + len(c)
    flat = np.concatenate(codes) if codes else np.zeros(0, dtype=np.int32)
    level = np.array([max((abs(x) for x in r), default=0) - 1 for r in relators], dtype=np.int64)
    return flat.astype(np.int32), offsets, level


@_accel.njit
def _eval_word(mul, inv, img, letters, start, stop):
    acc = 0
    for t in range(start, stop):
        c = letters[t]
        p = img[c >> 1]
        if c & 1:
            p = inv[p]
        acc = mul[acc, p]
    return acc


@_accel.njit
def _accept(order, mode, param, w):
    if mode == 0:
        return True
    if mode == 1:
        return w != 0
    if mode == 2:
        return order[w] >= param
    return param % order[w] != 0


@_accel.njit
def _search_dfs(mul, inv, order, m, rel_letters, rel_offsets, rel_level, word, mode, param, max_out):
    N = mul.shape[0]
    nrel = rel_level.shape[0]
    out = np.empty((max_out, m), dtype=np.int32)
    cnt = 0
    img = np.zeros(m, dtype=np.int32)
    depth = 0
    img[0] = -1
    while depth >= 0:
        img[depth] += 1
        if img[depth] >= N:
            depth -= 1
            continue
        ok = True
        for r in range(nrel):
            if rel_level[r] == depth:
                if _eval_word(mul, inv, img, rel_letters, rel_offsets[r], rel_offsets[r + 1]) != 0:
                    ok = False
                    break
        if not ok:
            continue
        if depth == m - 1:
            w = _eval_word(mul, inv, img, word, 0, word.shape[0])
            if _accept(order, mode, param, w):
                out[cnt, :] = img
                cnt += 1
                if cnt == max_out:
                    break
        else:
            depth += 1
            img[depth] = -1
    return out[:cnt]


def _eval_rows(mul, inv, rows, letters):
    acc = np.zeros(rows.shape[0], dtype=np.int32)
    for c in letters:
        p = rows[:, c >> 1]
        if c & 1:
            p = inv[p]
        acc = mul[acc, p]
    return acc


def _accept_rows(order, mode, param, w):
    if mode == ACCEPT_ALL:
        return np.ones(w.shape[0], dtype=bool)
    if mode == ACCEPT_NONTRIVIAL:
        return w != 0
    if mode == ACCEPT_ORDER_AT_LEAST:
        return order[w] >= param
    return param % order[w] != 0


def _search_numpy(mul, inv, order, m, rel_letters, rel_offsets, rel_level, word, mode, param, max_out):
    N = mul.shape[0]
    rels_at = [[rel_letters[rel_offsets[r]:rel_offsets[r + 1]] for r in range(len(rel_level)) if rel_level[r] == d]
               for d in range(m)]
    found = []
    remaining = [max_out]

    def walk(prefix, depth):
        # prefix: (rows, depth) partial image tuples, all rows consistent so far
        rows = np.empty((prefix.shape[0] * N, depth + 1), dtype=np.int32)
        rows[:, :depth] = np.repeat(prefix, N, axis=0)
        rows[:, depth] = np.tile(np.arange(N, dtype=np.int32), prefix.shape[0])
        for letters in rels_at[depth]:
            rows = rows[_eval_rows(mul, inv, rows, letters) == 0]
        if depth == m - 1:
            rows = rows[_accept_rows(order, mode, param, _eval_rows(mul, inv, rows, word))]
            take = rows[:remaining[0]]
            found.append(take)
            remaining[0] -= take.shape[0]
            return
        step = max(1, CHUNK_ROWS // N)
        for s in range(0, rows.shape[0], step):
            walk(rows[s:s + step], depth + 1)
            if remaining[0] == 0:
                return

    walk(np.zeros((1, 0), dtype=np.int32), 0)
    if not found:
        return np.zeros((0, m), dtype=np.int32)
    return np.concatenate(found)


def search(k, m, relators, word=(), mode=ACCEPT_ALL, param=0, max_out=None, use_numba=None):
    """
    Image tuples (rows of permutation indices into ``perm_tables(k)[0]``)
    of homomorphisms F_m -> S_k killing ``relators`` and whose value on
    ``word`` passes ``mode``; lexicographic order, at most ``max_out``.
    """
    perms, mul, inv, order = perm_tables(k)
    if m == 0:
        raise ValueError("need at least one generator")
    if max_out is None:
        max_out = perms.shape[0] ** m
    max_out = int(max(1, max_out))
    rel_letters, rel_offsets, rel_level = encode_relators(relators)
    # relators with no letters are trivially satisfied
    rel_level = np.where(rel_level < 0, m, rel_level)
    w = encode(word)
    if use_numba is None:
        use_numba = _accel.HAVE_NUMBA
    if use_numba and not _accel.HAVE_NUMBA:
        raise RuntimeError("numba backend requested but unavailable")
    fn = _search_dfs if use_numba else _search_numpy
    res = fn(mul, inv, order, int(m), rel_letters, rel_offsets, rel_level, w, int(mode), int(param), max_out)
    return np.asarray(res, dtype=np.int32)

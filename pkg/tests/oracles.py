"""Independent reference implementations used as test oracles."""
from collections import deque
from itertools import product


def reduce(xs):
    out = []
    for x in xs:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyc_reduce(xs):
    xs = reduce(xs)
    while len(xs) > 1 and xs[0] == -xs[-1]:
        xs = xs[1:-1]
    return xs


def canon(xs):
    """Conjugacy class representative: smallest rotation as a plain tuple."""
    xs = cyc_reduce(xs)
    if not xs:
        return ()
    return min(tuple(xs[i:] + xs[:i]) for i in range(len(xs)))


def inv(xs):
    return [-x for x in reversed(xs)]


def _nielsen_images():
    a, b = [1], [2]
    A, B = [-1], [-2]
    return [
        {1: b, 2: a}, {1: A, 2: b}, {1: a, 2: B},
        {1: a + b, 2: b}, {1: b + a, 2: b}, {1: a, 2: b + a}, {1: a, 2: a + b},
        {1: a + B, 2: b}, {1: B + a, 2: b}, {1: a, 2: b + A}, {1: a, 2: A + b},
    ]


NIELSEN = _nielsen_images()


def apply(images, xs):
    out = []
    for x in xs:
        out.extend(images[x] if x > 0 else inv(images[-x]))
    return reduce(out)


def is_primitive_f2(xs, slack=4):
    """BFS over the Nielsen orbit of the conjugacy class, lengths capped at |w| + slack."""
    start = canon(xs)
    if len(start) == 1:
        return True
    if not start:
        return False
    cap = len(start) + slack
    seen = {start}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        for img in NIELSEN:
            v = canon(apply(img, list(w)))
            if len(v) == 1:
                return True
            if v and len(v) <= cap and v not in seen:
                seen.add(v)
                todo.append(v)
    return False


# Z * C2 with c = ab: a word in a, b becomes a word in a, c, where b = a^-1 c.
def zc2_trivial(xs):
    """Normal form in <a> * <c; c^2>: syllables alternate powers of a and c."""
    letters = []
    for x in xs:
        if x == 1:
            letters.append(("a", 1))
        elif x == -1:
            letters.append(("a", -1))
        elif x == 2:
            letters += [("a", -1), ("c", 1)]
        else:
            letters += [("c", 1), ("a", 1)]   # b^-1 = c^-1 a = c a
    out = []
    for g, e in letters:
        if out and out[-1][0] == g:
            e2 = out[-1][1] + e
            if g == "c":
                e2 %= 2
            out.pop()
            if e2:
                out.append((g, e2))
        else:
            out.append((g, e % 2 if g == "c" else e))
    return not out


def perm_compose(p, q):
    """p then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def perm_inv(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def count_homs(k, m, relators):
    """Plain itertools recount of homomorphisms F_m -> S_k killing the relators."""
    from itertools import permutations
    perms = list(permutations(range(k)))
    ident = tuple(range(k))
    n = 0
    for imgs in product(perms, repeat=m):
        ok = True
        for r in relators:
            g = ident
            for x in r:
                g = perm_compose(g, imgs[x - 1] if x > 0 else perm_inv(imgs[-x - 1]))
            if g != ident:
                ok = False
                break
        n += ok
    return n

"""
Acceptance suite.  Each criterion prints one PASS/FAIL line (collected in
the terminal summary under pytest, printed directly when run as a script).
"""
import sys
import time
from contextlib import contextmanager
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import is_primitive_f2, zc2_trivial  # noqa: E402
from orelt import classify as cl, dehn, fixtures, probes, quotients  # noqa: E402
from orelt.cli.formats import parse_certificate, parse_gog  # noqa: E402
from orelt.cli.syntax import parse_presentation, parse_word  # noqa: E402
from orelt.gog import fundamental_group, verify_isomorphic  # noqa: E402
from orelt.presentation import OneRelatorPresentation  # noqa: E402
from orelt.quotients import Status  # noqa: E402
from orelt.whitehead import is_primitive  # noqa: E402
from orelt.words import CyclicWord, Word, commutator, cyclic_words, words_up_to  # noqa: E402

RESULTS = []


@contextmanager
def criterion(number, title, limit_s):
    t0 = time.perf_counter()
    state = {"ok": False, "detail": ""}
    try:
        yield state
    finally:
        dt = time.perf_counter() - t0
        ok = state["ok"] and dt < limit_s
        detail = state["detail"] or ("" if state["ok"] else "assertion failed")
        if state["ok"] and dt >= limit_s:
            detail = f"over time limit {limit_s}s"
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({dt:.2f}s / {limit_s}s){' - ' + detail if detail else ''}"
        RESULTS.append(line)
        print(line)
    assert ok, line


def _pres(name):
    P = parse_presentation(fixtures.read(name))
    return P if not isinstance(P, OneRelatorPresentation) else P.to_presentation()


def test_criterion_1_fig1():
    with criterion(1, "fig1 graph certificate-verifies against <a,t;(t^-1 a^-1 t a^2)^2>", 5) as st:
        src = fundamental_group(parse_gog(fixtures.read("fig1.gog")))
        target = _pres("fig1_target.pres")
        cert = parse_certificate(fixtures.read("fig1.cert"))
        st["ok"] = verify_isomorphic(src, target, cert)
        if not st["ok"]:
            st["detail"] = (f"abelianizations differ: pi1 {src.abelian_invariants()} vs target "
                            f"{target.abelian_invariants()}")


def test_fig1_corrected_edge_map():
    # with the second edge map read as c^-1 the same certificate replays
    src = fundamental_group(parse_gog(fixtures.read("fig1_corrected.gog")))
    assert verify_isomorphic(src, _pres("fig1_target.pres"), parse_certificate(fixtures.read("fig1_corrected.cert")))


def test_criterion_2_fig2():
    with criterion(2, "fig2 graph (n=3) pi1 is the amalgam and certificate-verifies", 30) as st:
        src = fundamental_group(parse_gog(fixtures.read("fig2.gog")))
        amalgam = src.same_as(_pres("fig2_amalgam.pres"))
        verified = verify_isomorphic(src, _pres("fig2_target.pres"), parse_certificate(fixtures.read("fig2.cert")))
        st["ok"] = amalgam and verified
        st["detail"] = "" if st["ok"] else f"amalgam match {amalgam}, certificate {verified}"


def test_criterion_3_ends_harness():
    with criterion(3, "ends biconditional over all roots (rank 2, |R|<=6; rank 3, |R|<=4; n=2)", 300) as st:
        r2 = probes.ends_lemma_harness(2, 6, 2)
        r3 = probes.ends_lemma_harness(3, 4, 2)
        bad = len(r2["violations"]) + len(r3["violations"])
        counts = r2["count_matches"] and r3["count_matches"]
        st["ok"] = bad == 0 and counts
        st["detail"] = f"{r2['roots'] + r3['roots']} roots, {bad} violations, counts match: {counts}"


def test_criterion_4_dehn_oracle():
    with criterion(4, "Dehn solver agrees with the Z*C2 normal form on all words of length <= 8", 60) as st:
        P = parse_presentation(fixtures.read("z_star_c2.pres"))
        total = disagree = 0
        for w in words_up_to(2, 8):
            total += 1
            disagree += dehn.is_trivial(w, P) != zc2_trivial(list(w))
        st["ok"] = disagree == 0
        st["detail"] = f"{total} words, {disagree} disagreements"


def test_criterion_5_torsion_order():
    for n in (2, 3, 4):
        with criterion(5, f"torsion order of [a,b] in <a,b;[a,b]^{n}> is {n}", 60) as st:
            P = OneRelatorPresentation.from_relator(2, commutator([1], [2]) ** n)
            w = commutator([1], [2])
            v = cl.torsion_order(P, w, 6)
            ok = v.status is Status.PROVEN_TRUE and v.value == n
            if ok:
                ok = (dehn.check_replay(w ** n, v.certificate["upper"], P)
                      and quotients.check_order_certificate(P, w, n, v.certificate["lower"]))
            st["ok"] = ok
            st["detail"] = f"got {v.status.value} value={v.value}"


def test_criterion_6_primitivity_oracle():
    with criterion(6, "is_primitive matches the Nielsen-orbit oracle on F2 words of length <= 5", 60) as st:
        total = disagree = 0
        for w in words_up_to(2, 5):
            if not w:
                continue
            total += 1
            disagree += is_primitive(w, 2) != is_primitive_f2(list(w))
        st["ok"] = disagree == 0
        st["detail"] = f"{total} words, {disagree} disagreements"


def test_criterion_7_malnormality():
    with criterion(7, "no witness for <a>, <b> in <a,b;[a,b]^2>; dihedral witness (1,-1) in <b,c;(bc^2)^2>", 120) as st:
        P = OneRelatorPresentation.from_relator(2, commutator([1], [2]) ** 2)
        bounds = probes.SearchBounds(5, 3, 6)
        none_found = all(probes.malnormal_witness_search(P, Word([g]), bounds).status is Status.UNKNOWN
                         for g in (1, 2))
        Q = parse_presentation(fixtures.read("base_fig1.pres"))
        x = parse_word("(b c^2) c (b c^2) c^-1", Q.names)
        v = probes.malnormal_witness_search(Q, x, probes.SearchBounds(4, 2, 6))
        wit = v.certificate
        found = v.status is Status.PROVEN_TRUE and (wit.i, wit.j) == (1, -1) and wit.check(Q)
        st["ok"] = none_found and found
        st["detail"] = f"commutator case unknown: {none_found}, dihedral witness verified: {found}"


def test_criterion_8_fuchsian():
    with criterion(8, "Fuchsian criterion matches direct rotation comparison for rank-2 roots |R| <= 6", 10) as st:
        c = tuple(commutator([1], [2]))
        ci = tuple(Word(c).inverse())
        shifts = {c[k:] + c[:k] for k in range(4)} | {ci[k:] + ci[:k] for k in range(4)}
        total = disagree = positives = 0
        for L in range(1, 7):
            for root in cyclic_words(2, L, primitive_only=True):
                total += 1
                expect = tuple(root.word) in shifts
                positives += expect
                got = cl.is_fuchsian_2gen(OneRelatorPresentation(2, root, 2))
                disagree += got != expect
        st["ok"] = disagree == 0 and positives == 2
        st["detail"] = f"{total} roots, {positives} commutator classes, {disagree} disagreements"


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

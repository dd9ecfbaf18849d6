"""
``orelt`` command-line front end.

Exit status: 0 on success, 1 when a checking command fails (``gog
verify``, ``gog validate``, ``harness``) or, with ``--strict``, when any
boolean result is negative, 2 on errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .. import _accel, classify as cl, dehn, probes, quotients, whitehead
from .. import fixtures
from ..errors import OreltError, ResourceError
from ..gog import find_certificate, fundamental_group_raw, validate, verify_isomorphic
from ..presentation import OneRelatorPresentation, Presentation
from ..quotients import Status, Verdict
from ..words import Word
from .formats import format_certificate, parse_certificate, parse_gog
from .syntax import format_presentation, format_word, inline, parse_presentation, parse_word


class Report:
    """Ordered report; ``timings`` is kept apart so reruns compare equal without it."""

    def __init__(self, command, inputs):
        self.data = {"command": command, "inputs": inputs}
        self.timings = {}
        self.negative = False

    def __setitem__(self, key, value):
        self.data[key] = value

    def to_json(self, timings=True):
        d = dict(self.data)
        if timings:
            d["timings"] = self.timings
        return json.dumps(d, indent=2, ensure_ascii=False) + "\n"

    def to_text(self, timings=True):
        lines = []

        def emit(key, val, indent=0):
            pad = "  " * indent
            if isinstance(val, dict):
                lines.append(f"{pad}{key}:")
                for k, v in val.items():
                    emit(k, v, indent + 1)
            elif isinstance(val, list) and val and isinstance(val[0], (dict, list)):
                lines.append(f"{pad}{key}:")
                for i, v in enumerate(val):
                    emit(f"- [{i}]", v, indent + 1)
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")

        for k, v in self.data.items():
            emit(k, v)
        if timings:
            emit("timings", self.timings)
        return "\n".join(lines) + "\n"


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)


def _read(path):
    p = Path(path)
    if not p.is_file():
        try:
            p = fixtures.path(path)
        except FileNotFoundError:
            raise OreltError(f"no such file or fixture: {path}") from None
    return p.read_text()


def _load_presentation(path):
    return parse_presentation(_read(path))


def _one_relator(P):
    if isinstance(P, OneRelatorPresentation):
        return P
    return P.as_one_relator()


def _hom(h):
    return None if h is None else h.to_dict()


def _verdict(v: Verdict, render=None):
    out = {"status": v.status.value}
    if v.value is not None:
        out["value"] = v.value
    if render is not None and v.certificate is not None:
        out["certificate"] = render(v.certificate)
    out["bounds"] = dict(v.bound)
    return out


def _steps(P, steps):
    return [{"word": format_word(before, P.names), "at": i, "length": length,
             "replacement": format_word(repl, P.names)} for before, i, length, repl in steps]


def _order_cert(P, cert):
    return {"upper": _steps(P, cert["upper"]),
            "lower": [{"e": e, "hom": _hom(h)} for e, h in cert["lower"]]}


def cmd_classify(args, rep):
    P = _one_relator(_load_presentation(args.presentation))
    caps = {"max_rank": args.max_rank, "max_degree": args.max_degree, "order_bound": args.order_bound or P.n}
    rep["caps"] = caps
    rep["presentation"] = inline(P)
    ff = cl.decompose_free_factors(P, max_rank=args.max_rank)
    rep["free_factors"] = {"core": inline(ff.core), "free_rank": ff.free_rank,
                           "core_generators": [P.names[g - 1] for g in ff.generators]}
    if P.is_torsion:
        g, gh, ok = cl.classify_ends(P, max_rank=args.max_rank)
        rep["ends"] = {"G": str(g), "Ghat": str(gh), "lemma_consistent": ok}
        rep["one_ended"] = g is cl.EndsClass.ONE
        v = cl.torsion_order(P, P.root.word, caps["order_bound"], max_degree=args.max_degree)
        rep["torsion_order"] = _verdict(v, lambda c: _order_cert(P, c) if isinstance(c, dict) else None)
    else:
        rep["ends"] = None
        rep["torsion_order"] = None
    rep["fuchsian"] = cl.is_fuchsian_2gen(P) if P.m == 2 else None


def _word_arg(text, P):
    return parse_word(text, P.names)


def cmd_wp(args, rep):
    P = _one_relator(_load_presentation(args.presentation))
    u = _word_arg(args.word, P)
    rep["presentation"] = inline(P)
    if args.other is not None:
        v = _word_arg(args.other, P)
        res = dehn.are_equal(u, v, P)
        rep["equal"] = res
        target = u * v.inverse()
    else:
        target = u
        res = None
    final, steps = dehn.reduce_word(target, P)
    rep["trivial"] = not final
    rep["dehn_normal_form"] = format_word(final, P.names)
    if args.replay:
        rep["replay"] = _steps(P, steps)
    rep.negative = final != Word() if res is None else not res


def _free_group_input(args):
    if args.presentation:
        P = _load_presentation(args.presentation)
        names = P.names
        default = P.root.word if isinstance(P, OneRelatorPresentation) else None
    else:
        names = tuple(args.gens.split())
        default = None
    if args.word is not None:
        w = parse_word(args.word, names)
    elif default is not None:
        w = default
    else:
        raise OreltError("give a word with -w")
    return names, w


def cmd_minimize(args, rep):
    names, w = _free_group_input(args)
    rep["caps"] = {"max_rank": args.max_rank}
    rep["word"] = format_word(w, names)
    mf = whitehead.minimize(w, len(names), max_rank=args.max_rank)
    rep["minimal"] = format_word(mf.word.word, names)
    rep["length"] = len(mf.word)
    rep["support"] = [names[g - 1] for g in sorted(mf.support)]
    rep["witness_chain"] = [str(phi) for phi in mf.witness_chain]


def cmd_primitive(args, rep):
    names, w = _free_group_input(args)
    rep["caps"] = {"max_rank": args.max_rank}
    rep["word"] = format_word(w, names)
    res = whitehead.is_primitive(w, len(names), max_rank=args.max_rank)
    rep["primitive"] = res
    rep.negative = not res


def cmd_order(args, rep):
    P = _one_relator(_load_presentation(args.presentation))
    w = _word_arg(args.word, P)
    rep["caps"] = {"bound": args.bound, "max_degree": args.max_degree}
    rep["presentation"] = inline(P)
    rep["word"] = format_word(w, P.names)
    v = cl.torsion_order(P, w, args.bound, max_degree=args.max_degree)
    rep["order"] = _verdict(v, lambda c: _order_cert(P, c) if "upper" in c else None)


def cmd_quotients(args, rep):
    P = _load_presentation(args.presentation)
    rep["caps"] = {"max_degree": args.max_degree, "max_space": args.max_space}
    rep["presentation"] = inline(P)
    rep["degree"] = args.degree
    homs = quotients.enumerate_homs(P, args.degree, max_degree=args.max_degree, max_space=args.max_space)
    rep["count"] = len(homs)
    rep["homs"] = [_hom(h) for h in homs[:args.limit]]
    rep["backend"] = _accel.backend() if args.show_backend else None


def _bounds(args):
    return probes.SearchBounds(args.max_y_length, args.max_power, args.max_coset_power)


def cmd_malnormal(args, rep):
    P = _one_relator(_load_presentation(args.presentation))
    x = _word_arg(args.x, P)
    b = _bounds(args)
    rep["caps"] = b.as_dict()
    rep["presentation"] = inline(P)
    rep["x"] = format_word(x, P.names)
    v = probes.malnormal_witness_search(P, x, b)

    def render(wit):
        return {"y": format_word(wit.y, P.names), "i": wit.i, "j": wit.j, "coset_bound": wit.coset_bound,
                "replay_ok": wit.check(P)}

    rep["witness"] = _verdict(v, render)
    rep.negative = v.status is Status.PROVEN_TRUE


def cmd_tmember(args, rep):
    P = _one_relator(_load_presentation(args.presentation))
    w = _word_arg(args.word, P)
    b = _bounds(args)
    rep["caps"] = dict(b.as_dict(), max_degree=args.max_degree)
    rep["presentation"] = inline(P)
    rep["word"] = format_word(w, P.names)
    v = probes.t_membership(P, w, b, max_degree=args.max_degree)

    def render(c):
        if isinstance(c, probes.ConjugateProduct):
            return {"conjugates": [{"u": format_word(u, P.names), "sign": e} for u, e in c.factors],
                    "replay_ok": c.evaluate(P.root.word) == w}
        if isinstance(c, quotients.FiniteQuotientHom):
            return {"hom": _hom(c)}
        return c

    rep["member"] = _verdict(v, render)
    rep.negative = v.status is Status.PROVEN_FALSE


def _gog(args):
    return parse_gog(_read(args.graph))


def cmd_gog_validate(args, rep):
    G = _gog(args)
    v = validate(G)
    rep["vertices"] = len(G.vertices)
    rep["edges"] = len(G.edges)
    rep["jsj"] = G.jsj
    rep["status"] = v.status.value
    rep["violations"] = v.certificate["violations"]
    rep["warnings"] = v.certificate["warnings"]
    rep["checked"] = v.certificate["checked"]
    rep.negative = v.status is Status.PROVEN_FALSE
    rep.hard_fail = rep.negative


def cmd_gog_pi1(args, rep):
    G = _gog(args)
    pi = fundamental_group_raw(G, collapse=not args.raw)
    rep["presentation"] = inline(pi.presentation)
    rep["generators"] = pi.presentation.m
    rep["relators"] = len(pi.presentation.relators)
    if pi.collapse:
        rep["collapse"] = format_certificate(pi.raw, pi.collapse).splitlines()
    rep["abelianization"] = _abelian(pi.presentation)
    if args.output:
        Path(args.output).write_text(format_presentation(pi.presentation))


def _abelian(P):
    rank, torsion = P.abelian_invariants()
    return {"free_rank": rank, "torsion": list(torsion)}


def cmd_gog_verify(args, rep):
    G = _gog(args)
    source = fundamental_group_raw(G).presentation
    target = _load_presentation(args.target)
    target_p = target if isinstance(target, Presentation) else target.to_presentation()
    rep["source"] = inline(source)
    rep["target"] = inline(target_p)
    if args.find:
        cert = find_certificate(source, target_p)
        rep["found"] = cert is not None
        if cert is not None:
            text = format_certificate(source, cert)
            rep["certificate"] = text.splitlines()
            if args.certificate:
                Path(args.certificate).write_text(text)
    else:
        if not args.certificate:
            raise OreltError("gog verify needs -c CERT or --find")
        cert = parse_certificate(_read(args.certificate))
        rep["certificate"] = format_certificate(source, cert).splitlines() if cert else []
    ok = cert is not None and verify_isomorphic(source, target_p, cert)
    rep["verified"] = ok
    if not ok:
        from ..gog import apply_certificate
        from ..errors import CertificateError
        try:
            if cert is not None:
                rep["replayed"] = inline(apply_certificate(source, cert))
        except CertificateError as exc:
            rep["replay_error"] = str(exc)
        rep["abelianization"] = {"source": _abelian(source), "target": _abelian(target_p)}
    rep.negative = not ok
    rep.hard_fail = not ok


def cmd_harness(args, rep):
    res = probes.ends_lemma_harness(args.rank, args.max_length, args.n)
    runtime = res.pop("runtime_s")
    rep.timings["harness_s"] = round(runtime, 4)
    rep["caps"] = {"rank_caps": {str(k): v for k, v in probes.HARNESS_CAPS.items()}}
    for k, v in res.items():
        rep[k] = {str(a): b for a, b in v.items()} if isinstance(v, dict) else v
    rep.negative = bool(res["violations"]) or not res["count_matches"]
    rep.hard_fail = rep.negative


def _add_caps(p, degree=True, rank=False):
    if degree:
        p.add_argument("--max-degree", type=int, default=quotients.DEFAULT_MAX_DEGREE,
                       help="largest symmetric group S_k searched")
    if rank:
        p.add_argument("--max-rank", type=int, default=whitehead.DEFAULT_MAX_RANK,
                       help="refuse Whitehead minimization above this rank")


def _add_bounds(p, y=4, power=3, coset=6):
    p.add_argument("--max-y-length", type=int, default=y)
    p.add_argument("--max-power", type=int, default=power)
    p.add_argument("--max-coset-power", type=int, default=coset)


def build_parser():
    ap = argparse.ArgumentParser(prog="orelt", description="Computations with one-relator groups with torsion.")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--no-timings", action="store_true", help="omit timings (byte-identical reruns)")
    ap.add_argument("--strict", action="store_true", help="exit 1 on any negative boolean result")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="free factors, ends, torsion order, Fuchsian test")
    p.add_argument("-p", "--presentation", required=True)
    p.add_argument("--order-bound", type=int, default=None)
    _add_caps(p, rank=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("wp", help="word problem by Dehn reduction")
    p.add_argument("-p", "--presentation", required=True)
    p.add_argument("-w", "--word", required=True)
    p.add_argument("-v", "--other", help="compare with this word instead of the identity")
    p.add_argument("--replay", action="store_true", help="include the reduction steps")
    p.set_defaults(func=cmd_wp)

    for name, func, hlp in (("minimize", cmd_minimize, "Whitehead-minimal form"),
                            ("primitive", cmd_primitive, "primitivity test")):
        p = sub.add_parser(name, help=hlp)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("-p", "--presentation")
        src.add_argument("-g", "--gens", help="generator names, e.g. 'a b'")
        p.add_argument("-w", "--word", help="defaults to the relator root of -p")
        _add_caps(p, degree=False, rank=True)
        p.set_defaults(func=func)

    p = sub.add_parser("order", help="torsion order of an element")
    p.add_argument("-p", "--presentation", required=True)
    p.add_argument("-w", "--word", required=True)
    p.add_argument("--bound", type=int, default=8)
    _add_caps(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("quotients", help="homomorphisms into S_k")
    p.add_argument("-p", "--presentation", required=True)
    p.add_argument("-k", "--degree", type=int, required=True)
    p.add_argument("--limit", type=int, default=10, help="how many homs to print")
    p.add_argument("--max-space", type=int, default=quotients.DEFAULT_MAX_SPACE)
    p.add_argument("--show-backend", action="store_true")
    _add_caps(p)
    p.set_defaults(func=cmd_quotients)

    p = sub.add_parser("malnormal", help="search for a malnormality witness for <x>")
    p.add_argument("-p", "--presentation", required=True)
    p.add_argument("-x", required=True)
    _add_bounds(p)
    p.set_defaults(func=cmd_malnormal)

    p = sub.add_parser("tmember", help="membership in the normal closure of the root")
    p.add_argument("-p", "--presentation", required=True)
    p.add_argument("-w", "--word", required=True)
    _add_bounds(p, y=3, power=2)
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(func=cmd_tmember)

    g = sub.add_parser("gog", help="graphs of groups").add_subparsers(dest="gog_command", required=True)
    p = g.add_parser("validate")
    p.add_argument("-g", "--graph", required=True)
    p.set_defaults(func=cmd_gog_validate)
    p = g.add_parser("pi1")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--raw", action="store_true", help="skip eliminating elementary vertex generators")
    p.add_argument("-o", "--output", help="write the presentation to this file")
    p.set_defaults(func=cmd_gog_pi1)
    p = g.add_parser("verify")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-t", "--target", required=True)
    p.add_argument("-c", "--certificate")
    p.add_argument("--find", action="store_true", help="search for a certificate (written to -c if given)")
    p.set_defaults(func=cmd_gog_verify)

    h = sub.add_parser("harness", help="exhaustive checks").add_subparsers(dest="harness_command", required=True)
    p = h.add_parser("ends")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--max-length", type=int, default=6)
    p.add_argument("-n", type=int, default=2)
    p.set_defaults(func=cmd_harness)
    return ap


def _inputs(args):
    skip = {"func", "format", "no_timings", "strict"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def run(argv=None, out=None, err=None):
    """Run the CLI; returns ``(exit_code, report or None)``."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return (2 if exc.code else 0), None
    name = args.command + "".join(f" {getattr(args, a)}" for a in ("gog_command", "harness_command")
                                  if getattr(args, a, None))
    rep = Report(name, _inputs(args))
    rep.hard_fail = False
    t0 = time.perf_counter()
    try:
        args.func(args, rep)
    except ResourceError as exc:
        print(f"orelt: resource cap {exc.cap}={exc.value} exceeded: {exc}", file=err)
        return 2, None
    except (OreltError, OSError) as exc:
        print(f"orelt: {exc}", file=err)
        return 2, None
    rep.timings["total_s"] = round(time.perf_counter() - t0, 4)
    timings = not args.no_timings
    out.write(rep.to_json(timings) if args.format == "json" else rep.to_text(timings))
    if rep.hard_fail or (args.strict and rep.negative):
        return 1, rep
    return 0, rep


def main(argv=None):
    code, _ = run(argv)
    sys.exit(code)


if __name__ == "__main__":
    main()

"""Command-line front end.

Exit status: 0 success or affirmative verdict, 1 negative verdict, 2 usage
or input error, 3 resource bound exceeded.  ``--json`` prints one object
``{"command", "inputs", "result", "certificate"?}``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import autalg, freealg, groups, height, morphisms, ramsey, rewrite, words

OK, NEGATIVE, USAGE, BOUND = 0, 1, 2, 3


class InputError(Exception):
    pass


class Outcome:
    def __init__(self, text: str, result: Any, status: int = OK, certificate: Any = None):
        self.text = text
        self.result = result
        self.status = status
        self.certificate = certificate


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _alphabet(text: str) -> words.Alphabet:
    try:
        return words.Alphabet(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _word(w: str, alphabet: words.Alphabet) -> str:
    try:
        return alphabet.check(w)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# -- lyndon / fgf ---------------------------------------------------------------


def cmd_lyndon(args) -> Outcome:
    al = _alphabet(args.alphabet)
    if args.action == "check":
        w = _word(args.word, al)
        if not w:
            raise InputError("the empty word has no regularity")
        ok = words.is_assoc_regular(w, al)
        return Outcome("regular" if ok else "not regular", ok, OK if ok else NEGATIVE)
    if args.action == "gen":
        ws = words.generate_regular(al, args.max_len)
        return Outcome("\n".join(ws), ws)
    if args.action == "factor":
        w = _word(args.word, al)
        if not w:
            raise InputError("cannot factorize the empty word")
        fs = words.cfl_factorize(w, al)
        return Outcome(" ".join(fs), fs)
    w = _word(args.word, al)
    if not w or not words.is_assoc_regular(w, al):
        return Outcome(f"{w!r} is not regular", None, NEGATIVE)
    t = words.shirshov_bracketing(w, al)
    text = words.format_bracket(t)
    if args.expand:
        poly = freealg.expand_bracket(t)
        text += f"\n{poly}"
        return Outcome(text, {"bracket": words.format_bracket(t), "expansion": str(poly)})
    return Outcome(text, words.format_bracket(t))


def cmd_fgf(args) -> Outcome:
    al = _alphabet(args.alphabet)
    w = _word(args.word, al)
    occ = words.find_fgf(w, al)
    if occ is None:
        return Outcome("no fgf factor", None, NEGATIVE)
    res = {"f": occ.f, "g": occ.g, "position": occ.position}
    return Outcome(f"f={occ.f} g={occ.g or 'ε'} at {occ.position}", res)


# -- polynomials ------------------------------------------------------------------


def _poly(text: str) -> freealg.NcPoly:
    try:
        return freealg.parse_poly(text)
    except freealg.PolyParseError as exc:
        raise InputError(f"{text!r}: {exc}") from None


def _relations(args) -> rewrite.RelationSet:
    polys = []
    if args.relations:
        text = _read(args.relations)
        try:
            polys.extend(freealg.read_polys(text))
        except freealg.PolyParseError as exc:
            raise InputError(f"{args.relations}: {exc}") from None
    polys.extend(_poly(r) for r in args.rel or [])
    if not polys:
        raise InputError("no relations given (use --relations FILE or -r POLY)")
    try:
        return rewrite.RelationSet.of(polys)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _trace_rows(trace: rewrite.ReductionTrace) -> list[list]:
    return [[s.rule, s.left, s.right, str(s.coeff)] for s in trace.steps]


def cmd_poly(args) -> Outcome:
    G = _relations(args)
    if args.action == "reduce":
        trace = rewrite.reduce(_poly(args.poly), G)
        text = str(trace.result)
        if args.trace:
            text += "\n" + trace.export().rstrip()
        return Outcome(text, str(trace.result), certificate=_trace_rows(trace))
    if args.action == "complete":
        basis, status = rewrite.complete(G, args.max_deg)
        polys = [str(p) for p in basis]
        text = "\n".join(polys) + f"\nstatus: {status.value}"
        res = {"basis": polys, "status": status.value}
        return Outcome(text, res, OK if status is rewrite.Status.COMPLETE else BOUND)
    res = rewrite.is_member(_poly(args.poly), G, args.max_deg)
    status = {
        rewrite.Membership.IN_IDEAL: OK,
        rewrite.Membership.NOT_IN_IDEAL: NEGATIVE,
        rewrite.Membership.UNKNOWN: BOUND,
    }[res.verdict]
    text = res.verdict.value
    if res.verdict is rewrite.Membership.IN_IDEAL and args.trace:
        text += "\n" + res.trace.export().rstrip()
    elif res.verdict is not rewrite.Membership.IN_IDEAL:
        text += f" (normal form {res.normal_form})"
    cert = {"basis": [str(p) for p in res.basis], "trace": _trace_rows(res.trace)}
    return Outcome(
        text,
        {"verdict": res.verdict.value, "normal_form": str(res.normal_form), "bound": args.max_deg},
        status,
        cert,
    )


# -- diamond ------------------------------------------------------------------------


def parse_edges(text: str) -> tuple[list[str], list[tuple[str, str]]]:
    """``x -> y`` or ``x y`` per line; a lone name declares an isolated node."""
    nodes, edges = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace("->", " ").split()
        if len(parts) == 1:
            nodes.append(parts[0])
        elif len(parts) == 2:
            edges.append((parts[0], parts[1]))
        else:
            raise InputError(f"line {lineno}, column 1: expected 'x -> y'")
    return nodes, edges


def cmd_diamond(args) -> Outcome:
    nodes, edges = parse_edges(_read(args.file))
    try:
        scheme = rewrite.SimplificationScheme(nodes, edges)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rep = rewrite.diamond_report(scheme)
    names = [
        "unique normal forms",
        "Church-Rosser relation transitive",
        "locally confluent",
        "one minimal element per component",
        "connected iff joinable",
    ]
    lines = [f"{name}: {'yes' if v else 'no'}" for name, v in zip(names, rep.values())]
    res = dict(zip(
        ["canonical", "church_rosser_transitive", "locally_confluent",
         "one_minimum_per_component", "connected_iff_joinable"],
        rep.values(),
    ))
    return Outcome("\n".join(lines), res, OK if all(rep.values()) else NEGATIVE)


# -- automata -----------------------------------------------------------------------


def _automaton(args) -> autalg.Automaton:
    forbidden = list(args.forbid or [])
    if args.forbid_file:
        text = _read(args.forbid_file)
        for lineno, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0]
            for col, ch in enumerate(body, start=1):
                if not (ch.isalpha() or ch.isspace()):
                    raise InputError(f"{args.forbid_file}: line {lineno}, column {col}: unexpected character {ch!r}")
            if len(body.split()) > 1:
                raise InputError(f"{args.forbid_file}: line {lineno}, column 1: one word per line")
        forbidden += autalg.read_forbidden(text)
    letters = sorted({x for w in forbidden for x in w})
    if args.alphabet:
        al = args.alphabet
    elif set(letters) <= set("xy"):
        al = "xy"
    else:
        al = "".join(letters)
    try:
        return autalg.build_normal_word_automaton(_alphabet(al), forbidden)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_auto(args) -> Outcome:
    a = _automaton(args)
    if args.action == "build":
        if args.dot:
            return Outcome(a.to_dot().rstrip(), a.to_dot())
        rows = [f"{p} -{x}-> {q}" for p, x, q in sorted(a.edges())]
        text = f"{len(a.states)} states, alphabet {''.join(a.alphabet)}\n" + "\n".join(rows)
        return Outcome(
            text.rstrip(),
            {"states": len(a.states), "edges": [[p, x, q] for p, x, q in sorted(a.edges())]},
        )
    if args.action == "growth":
        per = autalg.growth_per_length(a, args.n)
        cum = autalg.growth(a, args.n)
        text = "\n".join(f"{k}\t{p}\t{c}" for k, (p, c) in enumerate(zip(per, cum)))
        return Outcome("n\tcount\tV(n)\n" + text, {"per_length": per, "cumulative": cum})
    cls = autalg.classify_growth(a)
    return Outcome(str(cls), {"class": cls.kind.value, "gk": cls.gk})


# -- height -----------------------------------------------------------------------------


def cmd_height(args) -> Outcome:
    al = _alphabet(args.alphabet)
    if args.action == "check":
        w = _word(args.word, al)
        wit = height.is_n_divisible(w, args.n, al)
        if wit is None:
            S = list(al.words_up_to(args.n - 1, include_empty=False)) if args.n > 1 else list(al)
            dec = height.height_over(w, S) if w else height.HeightDecomposition(())
            blocks = " ".join(f"({b})^{k}" for b, k in dec.blocks)
            return Outcome(
                f"not {args.n}-divisible; height {dec.height}: {blocks}",
                {"divisible": False, "height": dec.height},
                NEGATIVE,
                [[b, k] for b, k in dec.blocks],
            )
        text = f"{args.n}-divisible: {wit.prefix}|{'|'.join(wit.parts)}|{wit.suffix}"
        return Outcome(text, {"divisible": True},
                       certificate={"prefix": wit.prefix, "parts": list(wit.parts), "suffix": wit.suffix})
    try:
        rep = height.height_survey(al, args.n, args.max_len, max_words=args.max_words)
    except height.ResourceBoundExceeded as exc:
        return Outcome(str(exc), None, BOUND)
    rows = [vars(r) for r in rep.rows]
    text = rep.table() + f"max height {rep.max_height} (witness {rep.witness})"
    return Outcome(text, {"rows": rows, "max_height": rep.max_height, "witness": rep.witness})


# -- morphisms ----------------------------------------------------------------------------


def _morphism(source: str) -> morphisms.Morphism:
    if source in morphisms.NAMED:
        return morphisms.NAMED[source]
    try:
        return morphisms.Morphism.parse(_read(source))
    except ValueError as exc:
        raise InputError(f"{source}: {exc}") from None


def _power_free_verify(phi, source, max_len, k) -> str | None:
    for w in morphisms.power_free_words(source, max_len, k):
        if morphisms.is_power_free(morphisms.apply_morphism(phi, w), k) is not None:
            return w
    return None


def cmd_morph(args) -> Outcome:
    if args.action == "apply":
        phi = _morphism(args.morphism)
        try:
            img = morphisms.apply_morphism(phi, args.word)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        return Outcome(img, img)
    if args.action == "powerfree":
        occ = morphisms.is_power_free(args.word, args.k)
        if occ is None:
            return Outcome(f"{'square' if args.k == 2 else 'cube'}-free", True)
        u = args.word[occ.start : occ.start + occ.period]
        return Outcome(f"contains ({u})^{args.k} at {occ.start}", False, NEGATIVE,
                       {"start": occ.start, "period": occ.period})
    if args.action == "crochemore":
        phi = _morphism(args.morphism)
        res = morphisms.crochemore_test(phi)
        thue = morphisms.check_thue3_conditions(phi)
        text = f"k = {res.k}; {'square-free' if res.square_free else 'not square-free'}"
        if res.counterexample:
            text += f" (image of {res.counterexample} has a square)"
        return Outcome(
            text,
            {"k": res.k, "square_free": res.square_free,
             "thue_conditions": [thue.short_images_square_free, thue.images_factor_free]},
            OK if res.square_free else NEGATIVE,
            res.counterexample,
        )
    bad_cube = _power_free_verify(morphisms.THUE_BINARY, "ab", args.max_len, 3)
    bad_square = _power_free_verify(morphisms.THUE_TERNARY, "abc", args.ternary_len, 2)
    lines = [
        f"thue-binary keeps cube-free words of length <= {args.max_len} cube-free: "
        + ("yes" if bad_cube is None else f"no ({bad_cube})"),
        f"thue-ternary keeps square-free words of length <= {args.ternary_len} square-free: "
        + ("yes" if bad_square is None else f"no ({bad_square})"),
    ]
    ok = bad_cube is None and bad_square is None
    return Outcome("\n".join(lines), {"binary": bad_cube is None, "ternary": bad_square is None},
                   OK if ok else NEGATIVE)


# -- groups -------------------------------------------------------------------------------


def _presentation(source: str) -> groups.Presentation:
    if source == "genus2":
        return groups.GENUS2
    try:
        return groups.Presentation.parse(_read(source))
    except ValueError as exc:
        raise InputError(f"{source}: {exc}") from None


def _steps_json(p, steps):
    return [
        {"kind": s.kind, "before": p.format(s.before), "after": p.format(s.after),
         "position": s.position, "removed": p.format(s.removed), "inserted": p.format(s.inserted)}
        for s in steps
    ]


def random_trivial_word(p: groups.Presentation, rng: random.Random, factors: int = 4, conj_len: int = 4):
    """Freely reduced product of up to ``factors`` conjugates of relators."""
    w: tuple[int, ...] = ()
    gens = len(p.generators)
    for _ in range(rng.randint(1, factors)):
        g = tuple(rng.choice([1, -1]) * rng.randint(1, gens) for _ in range(rng.randint(0, conj_len)))
        r = rng.choice(p.relators)
        if rng.random() < 0.5:
            r = groups.inverse(r)
        w = groups.free_reduce(w + g + r + groups.inverse(g))
    return w


def cmd_group(args) -> Outcome:
    p = _presentation(args.presentation)
    if args.action == "cancel":
        lam = Fraction(args.lam)
        chk = groups.check_metric_condition(p, lam)
        text = f"C'({lam}) {'holds' if chk.holds else 'fails'}; longest piece {chk.max_piece}"
        return Outcome(text, {"holds": chk.holds, "max_piece": chk.max_piece},
                       OK if chk.holds else NEGATIVE)
    if args.action == "sample":
        rng = random.Random(args.seed)
        counts = {v.value: 0 for v in groups.Verdict}
        for _ in range(args.count):
            res = groups.dehn_decide(random_trivial_word(p, rng), p)
            counts[res.verdict.value] += 1
        text = ", ".join(f"{k}: {v}" for k, v in counts.items())
        return Outcome(text, counts, OK if counts["trivial"] == args.count else NEGATIVE)
    try:
        w = groups.parse_word(args.word, p.generators)
    except ValueError as exc:
        raise InputError(f"word {args.word!r}: {exc}") from None
    res = groups.dehn_decide(w, p)
    status = {groups.Verdict.TRIVIAL: OK, groups.Verdict.NONTRIVIAL: NEGATIVE,
              groups.Verdict.UNSUPPORTED: BOUND}[res.verdict]
    text = res.verdict.value
    if res.verdict is groups.Verdict.NONTRIVIAL:
        text += f" (irreducible form {p.format(res.final)})"
    return Outcome(text, res.verdict.value, status, _steps_json(p, res.steps))


# -- vdw ------------------------------------------------------------------------------------


def cmd_vdw(args) -> Outcome:
    res = ramsey.vdw_number(args.n, args.k, args.max)
    wit = ramsey.format_coloring(res.witness)
    if res.found:
        text = f"W({args.n},{args.k}) = {res.number}\nwitness for {res.number - 1}: {wit}"
        return Outcome(text, res.number, OK, wit)
    text = f"W({args.n},{args.k}) > {args.max}\nwitness for {args.max}: {wit}"
    return Outcome(text, None, BOUND, wit)


# -- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringwords", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="print a JSON envelope")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    # SUPPRESS keeps a subcommand from resetting flags given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lyndon", parents=[common], help="regular (Lyndon-Shirshov) words")
    ls = p.add_subparsers(dest="action", required=True)
    for name in ("check", "factor", "bracket"):
        q = ls.add_parser(name, parents=[common])
        q.add_argument("word")
        q.add_argument("--alphabet", default="ab")
        if name == "bracket":
            q.add_argument("--expand", action="store_true", help="also print the commutator expansion")
    q = ls.add_parser("gen", parents=[common])
    q.add_argument("max_len", type=int)
    q.add_argument("--alphabet", default="ab")
    p.set_defaults(func=cmd_lyndon)

    p = sub.add_parser("fgf", parents=[common], help="find an fgf factor")
    p.add_argument("word")
    p.add_argument("--alphabet", default="ab")
    p.set_defaults(func=cmd_fgf)

    p = sub.add_parser("poly", parents=[common], help="reduction, completion, membership")
    ps = p.add_subparsers(dest="action", required=True)
    for name in ("reduce", "complete", "member"):
        q = ps.add_parser(name, parents=[common])
        if name != "complete":
            q.add_argument("poly")
        q.add_argument("--relations", help="file with one polynomial per line")
        q.add_argument("-r", "--rel", action="append", help="relation polynomial (repeatable)")
        if name != "reduce":
            q.add_argument("--max-deg", type=int, default=8)
        if name != "complete":
            q.add_argument("--trace", action="store_true", help="print the reduction log")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("diamond", parents=[common], help="diamond-lemma report for a DAG")
    p.add_argument("file", help="edges 'x -> y', one per line")
    p.set_defaults(func=cmd_diamond)

    p = sub.add_parser("auto", parents=[common], help="monomial algebras via automata")
    aus = p.add_subparsers(dest="action", required=True)
    for name in ("build", "growth", "classify"):
        q = aus.add_parser(name, parents=[common])
        q.add_argument("--forbid", action="append", help="forbidden word (repeatable)")
        q.add_argument("--forbid-file", help="file with one forbidden word per line")
        q.add_argument("--alphabet", help="letters in order (default: xy, or the forbidden letters)")
        if name == "build":
            q.add_argument("--dot", action="store_true")
        if name == "growth":
            q.add_argument("-n", type=int, default=10)
    p.set_defaults(func=cmd_auto)

    p = sub.add_parser("height", parents=[common], help="n-divisibility and height")
    hs = p.add_subparsers(dest="action", required=True)
    q = hs.add_parser("check", parents=[common])
    q.add_argument("word")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("--alphabet", default="ab")
    q = hs.add_parser("survey", parents=[common])
    q.add_argument("-n", type=int, required=True)
    q.add_argument("--max-len", type=int, required=True)
    q.add_argument("--alphabet", default="ab")
    q.add_argument("--max-words", type=int, default=2_000_000)
    p.set_defaults(func=cmd_height)

    p = sub.add_parser("morph", parents=[common], help="morphisms and power-freeness")
    ms = p.add_subparsers(dest="action", required=True)
    q = ms.add_parser("apply", parents=[common])
    q.add_argument("morphism", help="thue-binary, thue-ternary, or a file of 'a -> image' lines")
    q.add_argument("word")
    q = ms.add_parser("powerfree", parents=[common])
    q.add_argument("word")
    q.add_argument("-k", type=int, choices=(2, 3), default=2)
    q = ms.add_parser("crochemore", parents=[common])
    q.add_argument("morphism")
    q = ms.add_parser("thue-verify", parents=[common])
    q.add_argument("--max-len", type=int, default=12, help="cube-free binary source length")
    q.add_argument("--ternary-len", type=int, default=8, help="square-free ternary source length")
    p.set_defaults(func=cmd_morph)

    p = sub.add_parser("group", parents=[common], help="small cancellation and Dehn's algorithm")
    gs = p.add_subparsers(dest="action", required=True)
    q = gs.add_parser("cancel", parents=[common])
    q.add_argument("presentation", help="'genus2' or a presentation file")
    q.add_argument("--lambda", dest="lam", default="1/6")
    q = gs.add_parser("dehn", parents=[common])
    q.add_argument("presentation")
    q.add_argument("word")
    q = gs.add_parser("sample", parents=[common], help="Dehn on random relator-conjugate products")
    q.add_argument("presentation")
    q.add_argument("--count", type=int, default=500)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("vdw", parents=[common], help="van der Waerden numbers")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--max", type=int, default=40)
    p.set_defaults(func=cmd_vdw)
    return parser


def _inputs(args) -> dict:
    skip = {"func", "json", "command"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (InputError, ValueError) as exc:
        # library ValueErrors are argument-validation failures
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    if args.json:
        env = {"command": " ".join(filter(None, [args.command, getattr(args, "action", None)])),
               "inputs": _inputs(args), "result": out.result}
        if out.certificate is not None:
            env["certificate"] = out.certificate
        print(json.dumps(env, default=str))
    else:
        print(out.text)
    return out.status


if __name__ == "__main__":
    sys.exit(main())

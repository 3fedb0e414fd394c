"""Command-line interface: ``regsem {analyze,reduce,multiply,enumerate,verify}``.

Every command builds a plain dict report; ``--json`` prints it as JSON and
the default prints the same keys as text.
"""
from __future__ import annotations

import argparse
import json
import sys as _sys

from . import sreg, verify
from .green import compute_green, is_unambiguous
from .representatives import RepresentativeError, choose_representatives, parse_override, validate_representatives
from .rewrite import (AmbiguousSemigroupError, InvalidRepresentativesError, RewriteSystem,
                      StepCapExceeded)
from .semigroup import DEFAULT_MAX_ORDER, SemigroupError, read_semigroup

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _classes(S, ids):
    groups = {}
    for x, c in enumerate(ids):
        if x != S.zero:
            groups.setdefault(c, []).append(S.names[x])
    return [groups[c] for c in sorted(groups)]


def _covers(S, G, kind):
    """Strict order between nonzero classes as (lower, upper) name pairs."""
    ids = getattr(G, kind)
    leq = {"L": G.leqL, "R": G.leqR, "J": G.leqJ}[kind]
    reps = {}
    for x in S.nonzero:
        reps.setdefault(ids[x], x)
    out = []
    for a in reps.values():
        for b in reps.values():
            if a != b and leq[a][b] and not leq[b][a]:
                out.append([S.names[a], S.names[b]])
    return out


def _load(args):
    try:
        S = read_semigroup(args.file, max_order=args.max_order)
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror or exc}") from None
    except SemigroupError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    G = compute_green(S)
    rc = None
    if getattr(args, "reps", None):
        try:
            with open(args.reps, encoding="utf-8") as fh:
                rc = parse_override(S, G, fh.read())
        except OSError as exc:
            raise InputError(f"cannot read {args.reps}: {exc.strerror or exc}") from None
        except RepresentativeError as exc:
            raise InputError(f"{args.reps}: {exc}") from None
    return S, G, rc


def _system(args, S, G, rc):
    try:
        return RewriteSystem(S, G, rc, force=args.force, unsafe_reps=args.unsafe_reps,
                             step_cap=getattr(args, "cap_steps", None))
    except AmbiguousSemigroupError as exc:
        raise InputError(f"{exc} (use --force to rewrite anyway)") from None
    except InvalidRepresentativesError as exc:
        raise InputError(f"invalid representatives: {exc} (use --unsafe-reps to rewrite anyway)") from None


def _word(rs, text):
    try:
        return rs.parse_word(text)
    except KeyError as exc:
        raise InputError(f"unknown element in word {text!r}: {exc.args[0]}") from None
    except ValueError as exc:
        raise InputError(f"bad word {text!r}: {exc}") from None


def _mark(rs, rep):
    if not rs.authoritative:
        rep["authoritative"] = False
    return rep


# --- commands ---------------------------------------------------------------

def cmd_analyze(args):
    S, G, rc = _load(args)
    w = is_unambiguous(S, G)
    rc = rc or choose_representatives(S, G)
    rep = {
        "elements": list(S.names),
        "zero": S.names[S.zero] if S.zero is not None else None,
        "identity": S.names[S.identity] if S.identity is not None else None,
        "L-classes": _classes(S, G.L),
        "R-classes": _classes(S, G.R),
        "H-classes": _classes(S, G.H),
        "D-classes": _classes(S, G.D),
        "J-classes": _classes(S, G.J),
        "L-order": _covers(S, G, "L"),
        "R-order": _covers(S, G, "R"),
        "J-order": _covers(S, G, "J"),
        "unambiguous": bool(w),
        "witness": None if w else {"triple": [S.names[x] for x in w.violation], "side": w.side},
        "R-reps": {S.names[x]: S.names[rc.r(x)] for x in S.nonzero},
        "L-reps": {S.names[x]: S.names[rc.l(x)] for x in S.nonzero},
        "rep-violations": validate_representatives(S, G, rc),
    }
    return EXIT_OK, rep


def _render_analyze(rep):
    lines = [f"elements: {' '.join(rep['elements'])}",
             f"zero: {rep['zero'] or 'none'}",
             f"identity: {rep['identity'] or 'none'}"]
    for key in ("L-classes", "R-classes", "H-classes", "D-classes", "J-classes"):
        lines.append(f"{key}: " + " ".join("{" + " ".join(c) + "}" for c in rep[key]))
    for key in ("L-order", "R-order", "J-order"):
        lines.append(f"{key}: " + (", ".join(f"{a} < {b}" for a, b in rep[key]) or "none"))
    if rep["unambiguous"]:
        lines.append("unambiguous: true")
    else:
        w = rep["witness"]
        lines.append(f"unambiguous: false, witness: ({', '.join(w['triple'])}) [{w['side']}]")
    lines.append("R-reps: " + " ".join(f"{k}->{v}" for k, v in rep["R-reps"].items()))
    lines.append("L-reps: " + " ".join(f"{k}->{v}" for k, v in rep["L-reps"].items()))
    for v in rep["rep-violations"]:
        lines.append(f"rep-violation: {v}")
    return lines


def cmd_reduce(args):
    S, G, rc = _load(args)
    rs = _system(args, S, G, rc)
    w = _word(rs, args.word)
    try:
        strat, rng = verify.parse_strategy(args.strategy)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    nf, steps, log = rs.reduce_codes(rs.encode(w), strat, rng, trace=args.trace)
    rep = {"input": rs.format_word(w), "normal-form": rs.format_codes(nf), "steps": steps}
    if args.trace:
        rep["trace"] = [{"rule": verify.RULES[r].name, "position": p, "word": rs.format_codes(c)}
                        for p, r, c in log]
    return EXIT_OK, _mark(rs, rep)


def _render_reduce(rep):
    lines = [rep["normal-form"]]
    for t in rep.get("trace", []):
        lines.append(f"  {t['rule']} @{t['position']}: {t['word']}")
    if rep.get("authoritative") is False:
        lines.append("authoritative: false")
    return lines


def cmd_multiply(args):
    S, G, rc = _load(args)
    rs = _system(args, S, G, rc)
    a, b = _word(rs, args.a), _word(rs, args.b)
    p = sreg.multiply(rs, a, b)
    return EXIT_OK, _mark(rs, {"a": rs.format_word(a), "b": rs.format_word(b), "product": rs.format_word(p)})


def _render_multiply(rep):
    lines = [rep["product"]]
    if rep.get("authoritative") is False:
        lines.append("authoritative: false")
    return lines


def cmd_enumerate(args):
    S, G, rc = _load(args)
    rs = _system(args, S, G, rc)
    try:
        table = sreg.enumerate_elements(rs, args.max_elements, args.max_steps)
    except sreg.SRegCapExceeded as exc:
        rep = {"error": str(exc), "partial-size": len(exc.partial), "authoritative": False}
        return EXIT_CAP, rep
    axioms = sreg.check_axioms(table)
    emb = sreg.embedding_check(rs, table)
    classes = sreg.class_idempotent_check(rs)
    j = sreg.compare_j_structure(S, G, table)
    text = sreg.export_table(rs, table)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    rep = {
        "size": len(table),
        "axioms": axioms,
        "embedding": emb,
        "class-idempotents": classes,
        "j-structure": {
            "injective": j.injective,
            "order-preserving": j.order_preserving,
            "order-reflecting": j.order_reflecting,
            "s-classes": [[S.names[x] for x in c] for c in j.s_classes],
            "classes": len(j.t_classes),
            "unmet-classes": [[rs.format_codes(table.elements[x]) for x in j.t_classes[c]] for c in j.unmet],
        },
        "elements": [rs.format_codes(w) for w in table.elements],
    }
    if not args.out:
        rep["table"] = text
    failed = axioms or emb or classes or not j.ok
    return (EXIT_FAIL if failed else EXIT_OK), _mark(rs, rep)


def _status(items):
    return "pass" if not items else f"FAIL ({len(items)})"


def _render_enumerate(rep):
    if "error" in rep:
        return [f"# cap exceeded: {rep['error']}", f"# partial size: {rep['partial-size']}",
                "# authoritative: false"]
    j = rep["j-structure"]
    lines = [f"# |S_reg| = {rep['size']}",
             f"# axioms: {_status(rep['axioms'])}",
             f"# embedding: {_status(rep['embedding'])}",
             f"# class idempotents: {_status(rep['class-idempotents'])}",
             f"# J-classes of S_reg: {j['classes']}",
             f"# J-map injective: {str(j['injective']).lower()}, order-preserving: "
             f"{str(j['order-preserving']).lower()}, order-reflecting: {str(j['order-reflecting']).lower()}",
             f"# J-classes missing the image of S: {len(j['unmet-classes'])}"]
    for v in rep["axioms"] + rep["embedding"] + rep["class-idempotents"]:
        lines.append(f"# violation: {v}")
    if rep.get("authoritative") is False:
        lines.append("# authoritative: false")
    if "table" in rep:
        lines.append(rep["table"].rstrip("\n"))
    return lines


def cmd_verify(args):
    S, G, rc = _load(args)
    rs = _system(args, S, G, rc)
    try:
        lemmas = verify.parse_lemmas(args.lemmas)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    r = verify.verify_all(rs, args.maxlen, lemmas, args.seeds, args.random, random_maxlen=10)
    fmt = rs.format_codes
    rep = {
        "unique-normal-forms": {"ok": r.sweep.ok, "words": r.sweep.words, "nodes": r.sweep.nodes,
                                "multiple-sinks": [[fmt(w), sorted(fmt(x) for x in s)] for w, s in r.sweep.multi[:10]],
                                "cycles": len(r.sweep.cycles), "unresolved": r.sweep.unresolved},
        "critical-pairs": {"ok": r.pairs.ok, "total": r.pairs.total, "joinable": r.pairs.joinable,
                           "divergent": [[fmt(cp.peak), cp.left_redex.rule.name, cp.right_redex.rule.name]
                                         for cp in r.pairs.divergent[:10]],
                           "unresolved": len(r.pairs.unresolved)},
        "lemmas": {"ok": r.lemmas.ok, "checked": sum(r.lemmas.checked.values()),
                   "skipped": sum(r.lemmas.skipped.values()),
                   "violations": [str(v) for v in r.lemmas.violations[:20]],
                   "notes": len(r.lemmas.notes)},
        "strategies": {"ok": not r.probe.disagreements and not r.probe.cap_exceeded,
                       "words": r.probe.words, "runs": r.probe.runs, "max-steps": r.probe.max_steps,
                       "disagreements": [fmt(w) for w, _ in r.probe.disagreements[:10]],
                       "cap-exceeded": len(r.probe.cap_exceeded)},
        "termination-diagnostics": {"ok": r.probe.continuity.ok, "runs": r.probe.continuity.runs,
                                    "max-changes-at-maximal": r.probe.continuity.max_changes_at_maximal,
                                    "violations": r.probe.continuity.violations[:10]},
        "ok": r.ok,
    }
    return (EXIT_OK if r.ok else EXIT_FAIL), _mark(rs, rep)


def _render_verify(rep):
    lines = []
    u = rep["unique-normal-forms"]
    lines.append(f"unique normal forms: {'pass' if u['ok'] else 'FAIL'} ({u['words']} words, {u['nodes']} nodes, "
                 f"{u['cycles']} cycles)")
    for w, s in u["multiple-sinks"]:
        lines.append(f"  {w} -> {' | '.join(s)}")
    c = rep["critical-pairs"]
    lines.append(f"critical pairs: {'pass' if c['ok'] else 'FAIL'} ({c['joinable']}/{c['total']} joinable, "
                 f"{c['unresolved']} unresolved)")
    for peak, a, b in c["divergent"]:
        lines.append(f"  divergent: {peak} ({a} vs {b})")
    lm = rep["lemmas"]
    lines.append(f"lemmas: {'pass' if lm['ok'] else 'FAIL'} ({lm['checked']} tuples checked, "
                 f"{lm['skipped']} skipped, {lm['notes']} notes)")
    for v in lm["violations"]:
        lines.append(f"  {v}")
    s = rep["strategies"]
    lines.append(f"strategies: {'pass' if s['ok'] else 'FAIL'} ({s['words']} words, {s['runs']} runs, "
                 f"max {s['max-steps']} steps)")
    for w in s["disagreements"]:
        lines.append(f"  disagreement: {w}")
    t = rep["termination-diagnostics"]
    lines.append(f"termination diagnostics: {'pass' if t['ok'] else 'FAIL'} ({t['runs']} runs, "
                 f"max {t['max-changes-at-maximal']} changes at a maximal position)")
    for v in t["violations"]:
        lines.append(f"  {v}")
    if rep.get("authoritative") is False:
        lines.append("authoritative: false")
    lines.append(f"result: {'pass' if rep['ok'] else 'FAIL'}")
    return lines


COMMANDS = {
    "analyze": (cmd_analyze, _render_analyze),
    "reduce": (cmd_reduce, _render_reduce),
    "multiply": (cmd_multiply, _render_multiply),
    "enumerate": (cmd_enumerate, _render_enumerate),
    "verify": (cmd_verify, _render_verify),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="Cayley table file")
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    common.add_argument("--reps", help="representative override file (lines 'R|L <member> <rep>')")

    rewriting = argparse.ArgumentParser(add_help=False)
    rewriting.add_argument("--force", action="store_true", help="rewrite even if S is not unambiguous")
    rewriting.add_argument("--unsafe-reps", action="store_true", help="accept invalid representatives")

    p = argparse.ArgumentParser(prog="regsem", description="Rewriting for the regular cover of a finite semigroup.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="Green's relations, unambiguity, representatives")
    r = sub.add_parser("reduce", parents=[common, rewriting], help="normal form of a word")
    r.add_argument("-w", "--word", required=True)
    r.add_argument("--trace", action="store_true")
    r.add_argument("--strategy", default="leftmost", help="leftmost, rightmost or random:<seed>")
    r.add_argument("--cap-steps", type=_positive, default=None)
    m = sub.add_parser("multiply", parents=[common, rewriting], help="product of two words")
    m.add_argument("-a", required=True)
    m.add_argument("-b", required=True)
    e = sub.add_parser("enumerate", parents=[common, rewriting], help="enumerate S_reg and check it")
    e.add_argument("--out", help="write the exported table here instead of stdout")
    e.add_argument("--max-elements", type=_positive, default=sreg.MAX_ELEMENTS)
    e.add_argument("--max-steps", type=_positive, default=sreg.MAX_STEPS)
    v = sub.add_parser("verify", parents=[common, rewriting], help="full verification report")
    v.add_argument("--maxlen", type=int, default=5)
    v.add_argument("--lemmas", default="all", help="'all' or ids like 3.2,3.9")
    v.add_argument("--seeds", type=int, default=5)
    v.add_argument("--random", type=int, default=1000, help="random words for the strategy check")
    return p


def _positive(text):
    x = int(text)
    if x <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    fn, render = COMMANDS[args.command]
    try:
        code, rep = fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_INPUT
    except StepCapExceeded as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_CAP
    except verify.SweepCapExceeded as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_CAP
    if args.json:
        print(json.dumps(rep, indent=2, sort_keys=True))
    else:
        print("\n".join(render(rep)))
    return code


def main():
    _sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line interface.

Exit codes: ``check`` 0 valid / 1 invalid, ``sat`` 0 SAT / 1 UNSAT, anything
else 0 on success; 2 on parse, context or usage errors.  ``--json`` switches
every command to a machine-readable report carrying ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import arguments, boole_v, elimination
from .constituents import (
    ConstituentSet, constituent_set, constituent_number, reduce, sigma_string,
    term_from_set,
)
from .errors import BooleAlgError, NoModel
from .semantics import Interpretation, canonical_model, decide_sat
from .syllogisms import all_moods
from .syntax import parse_document, parse_term, print_formula, print_term, translate
from .terms import MAX_VARS, VarContext, infer_context, simplify

SCHEMA = 1
DEFAULT_MAX_VARS = 16


class UsageError(BooleAlgError):
    pass


# -- rendering helpers ---------------------------------------------------

def _set_json(cs: ConstituentSet) -> dict[str, Any]:
    return {
        "context": list(cs.context),
        "sigmas": cs.sigma_strings(),
        "numbers": cs.numbers(),
    }


def _model_json(m: Interpretation | None, ctx: VarContext) -> dict[str, Any] | None:
    if m is None:
        return None
    k = ctx.k
    return {
        "universe": sorted((sigma_string(e, k) for e in m.universe), reverse=True),
        "assignment": {n: sorted((sigma_string(e, k) for e in m.assignment[n]), reverse=True)
                       for n in ctx if n in m.assignment},
        "numbers": sorted(constituent_number(e, k) for e in m.universe),
        "numbered_assignment": {n: sorted(constituent_number(e, k) for e in m.assignment[n])
                             for n in ctx if n in m.assignment},
    }


def _model_text(m: Interpretation, ctx: VarContext) -> str:
    k = ctx.k

    def fmt(s):
        return "{" + ", ".join(sorted((sigma_string(e, k) for e in s), reverse=True)) + "}"

    parts = [f"universe {fmt(m.universe)}"]
    parts += [f"{n} = {fmt(m.assignment[n])}" for n in ctx if n in m.assignment]
    nums = ", ".join(f"C{i}" for i in sorted(constituent_number(e, k) for e in m.universe))
    return "; ".join(parts) + f"  # nonempty constituents {nums}"


def _set_text(cs: ConstituentSet) -> str:
    names = ", ".join(f"C{i}" for i in cs.numbers())
    sig = ", ".join(cs.sigma_strings())
    return f"{{{names}}}  (sigma over {' '.join(cs.context) or '()'}: {{{sig}}})"


def _report_json(r: arguments.ValidityReport) -> dict[str, Any]:
    cert = None
    if r.certificate is not None:
        cert = {
            "included": r.certificate.included.sigma_strings(),
            "covering": r.certificate.covering.sigma_strings(),
            "premiss": r.certificate.premiss,
        }
    return {
        "valid": r.valid,
        "route": r.route.value,
        "context": list(r.context),
        "certificate": cert,
        "countermodel": _model_json(r.witness, r.context),
    }


def _report_text(r: arguments.ValidityReport) -> list[str]:
    lines = [f"{'VALID' if r.valid else 'INVALID'}  (route: {r.route.value})"]
    if r.certificate is not None:
        c = r.certificate
        rel = "⊆" if c.holds() else "⊄"
        inc = ", ".join(c.included.sigma_strings())
        cov = ", ".join(c.covering.sigma_strings())
        via = f" via premiss {c.premiss + 1}" if c.premiss is not None else ""
        lines.append(f"certificate{via}: {{{inc}}} {rel} {{{cov}}}  "
                     f"(sigma over {' '.join(c.included.context)})")
    if r.witness is not None:
        lines.append("countermodel: " + _model_text(r.witness, r.context))
    return lines


# -- commands ------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(path: str, opts) -> Any:
    doc = parse_document(_read(path))
    ctx = infer_context(*doc.formulas, *doc.terms)
    ctx.check_size(opts.max_vars)
    return doc


def cmd_dnf(opts) -> tuple[int, dict, list[str]]:
    t = parse_term(opts.term)
    ctx = VarContext(opts.vars.replace(",", " ").split()) if opts.vars else infer_context(t)
    ctx.check_size(opts.max_vars)
    cs = constituent_set(t, ctx)
    dnf = term_from_set(cs)
    try:
        model = canonical_model(t, ctx)
    except NoModel:
        model = None
    data = {
        "term": print_term(t),
        "full_expansion": print_term(dnf),
        "constituents": _set_json(cs),
        "canonical_model": _model_json(model, ctx),
    }
    lines = [
        f"term:            {print_term(t)}",
        f"full expansion:  {print_term(dnf)}",
        f"constituents:    {_set_text(cs)}",
        "canonical model: " + (_model_text(model, ctx) if model else "none (t = 0 has no model)"),
    ]
    return 0, data, lines


def cmd_check(opts):
    doc = _load(opts.file, opts)
    r = arguments.check(doc.argument(), max_vars=opts.max_vars)
    return (0 if r.valid else 1), _report_json(r), _report_text(r)


def cmd_sat(opts):
    doc = _load(opts.file, opts)
    formulas = doc.formulas
    ctx = infer_context(*formulas)
    res = decide_sat(formulas, ctx)
    data = {"sat": res.sat, "context": list(ctx), "reason": res.reason,
            "offending": res.offending, "witness": _model_json(res.witness, ctx)}
    lines = [("SAT" if res.sat else "UNSAT") + f"  ({res.reason})"]
    if res.witness is not None:
        lines.append("witness: " + _model_text(res.witness, ctx))
    if res.offending is not None:
        lines.append(f"refuted formula: {print_formula(formulas[res.offending])}")
    return (0 if res.sat else 1), data, lines


def _split(doc, opts):
    if doc.conclusion is not None:
        raise UsageError("this command takes a list of formulas, not an argument")
    eqs = [f for f in doc.premisses if f.is_eq]
    negs = [f.lhs for f in doc.premisses if not f.is_eq]
    return reduce(eqs), negs


def _vars(opts) -> list[str]:
    xs = opts.x.replace(",", " ").split()
    if not xs:
        raise UsageError("-x needs at least one variable")
    return xs


def cmd_reduce(opts):
    doc = _load(opts.file, opts)
    p, negs = _split(doc, opts)
    p = simplify(p)
    data = {"equation": print_term(p), "negated": [print_term(q) for q in negs]}
    lines = [f"{print_term(p)} = 0"] + [f"{print_term(q)} != 0" for q in negs]
    return 0, data, lines


def cmd_eliminate(opts):
    doc = _load(opts.file, opts)
    p, negs = _split(doc, opts)
    xs = _vars(opts)
    if len(negs) > 1:
        raise UsageError(
            "no quantifier-free eliminant exists in general for two or more negated "
            "equations; use 'solve' for the parametric form")
    if negs:
        q = negs[0]
        res = None
        for x in xs:
            res = elimination.eliminate_one_one(p, q, x)
            p, q = res.eliminant, res.residual_neq
        res = elimination.EliminationResult(res.eliminant, tuple(xs), res.residual_neq)
    else:
        res = elimination.eliminate_many(p, xs, max_vars=opts.max_vars)
    return 0, _elim_json(res), _elim_text(res)


def _elim_json(res: elimination.EliminationResult) -> dict:
    return {
        "eliminated": list(res.eliminated),
        "eliminant": print_term(res.eliminant),
        "residual_neq": None if res.residual_neq is None else print_term(res.residual_neq),
    }


def _elim_text(res: elimination.EliminationResult) -> list[str]:
    lines = [f"eliminating {', '.join(res.eliminated)}:", f"  {print_term(res.eliminant)} = 0"]
    if res.residual_neq is not None:
        lines.append(f"  {print_term(res.residual_neq)} != 0")
    return lines


def cmd_solve(opts):
    doc = _load(opts.file, opts)
    p, negs = _split(doc, opts)
    xs = _vars(opts)
    if len(xs) != 1:
        raise UsageError("solve takes exactly one variable")
    x = xs[0]
    if not negs:
        s = elimination.solve_one(p, x)
        data = {
            "kind": "general",
            "variable": x,
            "parameter": s.parameter,
            "solution": print_term(s.expression),
            "condition": print_term(s.side_condition),
            "lower": print_term(s.lower),
            "upper": print_term(s.upper),
        }
        lines = [
            f"{x} = {print_term(s.expression)}   for arbitrary {s.parameter}",
            f"provided {print_term(s.side_condition)} = 0",
            f"equivalently {print_term(s.lower)} <= {x} <= {print_term(s.upper)}",
        ]
        return 0, data, lines
    s = elimination.solve_system(p, negs, x)
    data = {
        "kind": "parametric",
        "variable": x,
        "parameters": list(s.parameters),
        "solution": print_term(s.solution_expr),
        "constraints": [print_formula(f) for f in s.constraints],
    }
    lines = [f"{x} = {print_term(s.solution_expr)}",
             f"for some {', '.join(s.parameters)} with:"]
    lines += [f"  {print_formula(f)}" for f in s.constraints]
    return 0, data, lines


def cmd_translate(opts):
    direction, out = translate(opts.proposition)
    return 0, {"direction": direction, "input": opts.proposition, "output": out}, [out]


def cmd_vcheck(opts):
    doc = _load(opts.file, opts)
    arg = doc.argument()
    if arg.conclusion.is_eq:
        raise UsageError("vcheck needs a negated conclusion (q != 0)")
    p = reduce(f for f in arg.premisses if f.is_eq)
    negs = [f.lhs for f in arg.premisses if not f.is_eq]
    rv = boole_v.check_valid_via_v(p, negs, arg.conclusion.lhs)
    rd = arguments.check(arg, max_vars=opts.max_vars)
    agree = rv.valid == rd.valid
    data = {"v_method": _report_json(rv), "direct": _report_json(rd), "agree": agree}
    lines = ["V-method:"] + ["  " + s for s in _report_text(rv)]
    lines += ["direct:"] + ["  " + s for s in _report_text(rd)]
    lines.append("routes agree" if agree else "ROUTES DISAGREE")
    return (0 if rv.valid else 1), data, lines


def cmd_veliminate(opts):
    doc = _load(opts.file, opts)
    p, negs = _split(doc, opts)
    xs = _vars(opts)
    if len(negs) != 1 or len(xs) != 1:
        raise UsageError("veliminate takes one variable and exactly one negated equation")
    x, q = xs[0], negs[0]
    rv = boole_v.eliminate_one_one_via_v(p, q, x)
    rs = elimination.eliminate_one_one(p, q, x)
    ctx = infer_context(p, q).without([x])
    agree = (constituent_set(rv.eliminant, ctx) == constituent_set(rs.eliminant, ctx)
             and constituent_set(rv.residual_neq, ctx) == constituent_set(rs.residual_neq, ctx))
    data = {"v_method": _elim_json(rv), "direct": _elim_json(rs), "agree": agree}
    lines = ["V-method:"] + _elim_text(rv) + ["direct:"] + _elim_text(rs)
    lines.append("routes agree" if agree else "ROUTES DISAGREE")
    return 0, data, lines


def cmd_syllogisms(opts):
    rows = []
    for m in all_moods():
        r = arguments.check(m.argument())
        rows.append((m, r.valid))
    valid = [m for m, ok in rows if ok]
    # traditionally named moods that fail without existential import
    rejected = [m for m, ok in rows if not ok and m.name]
    data = {
        "total": len(rows),
        "valid": [{"mood": m.label, "name": m.name, "argument": m.sentences()} for m in valid],
        "rejected_named": [{"mood": m.label, "name": m.name} for m in rejected],
    }
    lines = [f"{len(valid)} of {len(rows)} moods are valid:"]
    lines += [f"  {m.label:7} {m.name or '':10} {'; '.join(m.sentences())}" for m in valid]
    lines.append("invalid traditional moods: "
                 + ", ".join(f"{m.name} ({m.label})" for m in rejected))
    return 0, data, lines


# -- entry point ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="boolealg", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="print a JSON report")
    ap.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS, metavar="K",
                    help=f"refuse contexts with more than K variables (max {MAX_VARS})")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dnf", help="full expansion and constituent set of a term")
    p.add_argument("term")
    p.add_argument("--vars", help="explicit variable order, e.g. x1,x2")
    p.set_defaults(func=cmd_dnf)

    for name, func, text in [
        ("check", cmd_check, "decide validity of an argument file"),
        ("sat", cmd_sat, "decide satisfiability of a list of formulas"),
        ("reduce", cmd_reduce, "merge the equations into one"),
        ("vcheck", cmd_vcheck, "decide validity through V-equations"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    for name, func, text in [
        ("eliminate", cmd_eliminate, "eliminate variables"),
        ("solve", cmd_solve, "solve for one variable"),
        ("veliminate", cmd_veliminate, "one-one elimination through a V-equation"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("-x", required=True, help="variable(s), comma separated")
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("translate", help="categorical sentence <-> basic formula")
    p.add_argument("proposition")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("syllogisms", help="evaluate all 256 moods")
    p.set_defaults(func=cmd_syllogisms)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        opts = ap.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        if not 0 <= opts.max_vars <= MAX_VARS:
            raise UsageError(f"--max-vars must be between 0 and {MAX_VARS}")
        code, data, lines = opts.func(opts)
    except (BooleAlgError, OSError) as e:
        if opts.json:
            print(json.dumps({"schema": SCHEMA, "command": opts.command, "error": str(e)},
                             sort_keys=True))
        print(f"boolealg {opts.command}: error: {e}", file=sys.stderr)
        return 2
    if opts.json:
        print(json.dumps({"schema": SCHEMA, "command": opts.command, **data},
                         sort_keys=True, ensure_ascii=False))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())

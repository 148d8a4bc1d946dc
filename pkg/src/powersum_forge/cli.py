"""Command-line interface.

Subcommands mirror the library surface: ``bernoulli``, ``faulhaber``,
``combo``, ``sandor``, ``verify``, ``relation``, ``quad`` and
``search``.  Output is JSON by default; ``--latex`` switches to the
display form where one exists.  Exit codes: 0 success, 1 verification
failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import render
from .cubic import (
    CubicQuadruple,
    FormQuadruple,
    check_characterization,
    content_reduce,
    evaluate_forms,
    sandor_generate,
    substitute,
    verify_cubic_identity,
)
from .exactcore import bernoulli
from .powersums import extract_common_factor, faulhaber, product, s1_power, s2_s1_power, square
from .quadratic import (
    PythagoreanQuadruple,
    SquareFormQuadruple,
    equal_sums_family,
    piezas_degenerate_triple,
    piezas_generate,
    powersum_quadruple,
    powersum_triple,
    verify_square_identity,
)
from .relations import build_relation, expand_relation, factor_common_root, parse_mode
from .search import (
    SearchConfig,
    SearchStats,
    SolutionRecord,
    run_search,
    verify_record,
    write_records,
)

OK = 0
VERIFICATION_FAILED = 1
USAGE_ERROR = 2


def _emit(obj: dict) -> str:
    return json.dumps(obj, indent=2)


def _parse_csv_ints(text: str, count: int, what: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise ValueError(f"{what} needs {count} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"{what} needs integers, got {text!r}") from None


def cmd_bernoulli(args) -> tuple[int, str]:
    value = bernoulli(args.k)
    if args.latex:
        return OK, f"B_{{{args.k}}} = {render.latex_rational(value)}"
    return OK, _emit({"k": args.k, "value": render.fraction_to_json(value)})


def cmd_faulhaber(args) -> tuple[int, str]:
    poly = faulhaber(args.k)
    if args.latex:
        sub = str(args.k) if args.k < 10 else f"{{{args.k}}}"
        return OK, f"S_{sub} = {render.poly_to_latex(poly, var='n', order='desc')}"
    return OK, _emit({"k": args.k, "polynomial": render.poly_to_json(poly)})


_COMBO_OPS = {
    "product": (2, lambda a: product(a[0], a[1])),
    "square": (1, lambda a: square(a[0])),
    "s1pow": (1, lambda a: s1_power(a[0])),
    "s2s1pow": (1, lambda a: s2_s1_power(a[0])),
}


def cmd_combo(args) -> tuple[int, str]:
    arity, fn = _COMBO_OPS[args.op]
    if len(args.args) != arity:
        raise ValueError(f"combo {args.op} takes {arity} integer argument(s)")
    combo = fn(args.args)
    if args.latex:
        return OK, render.combo_to_latex(combo)
    return OK, _emit({"op": args.op, "args": args.args, "combo": render.combo_to_json(combo)})


def _parse_matrix(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError("substitution matrix needs 4 comma-separated entries m11,m12,m21,m22")
    try:
        m11, m12, m21, m22 = (Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad matrix entries {text!r}") from None
    return ((m11, m12), (m21, m22))


def cmd_sandor(args) -> tuple[int, str]:
    seed = CubicQuadruple(args.a, args.b, args.c, args.d)
    fq = sandor_generate(seed)
    content = None
    if args.reduce:
        fq, content = content_reduce(fq)
    if args.subst:
        fq = substitute(fq, _parse_matrix(args.subst))
    if args.latex:
        return OK, render.cubic_forms_latex(fq)
    return OK, _emit(render.form_quadruple_to_json(fq, content=content))


def cmd_verify(args) -> tuple[int, str]:
    path = Path(args.file)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc

    stripped = text.strip()
    if stripped.startswith("{") and "\n{" not in stripped:
        obj = json.loads(stripped)
        if "q" not in obj:
            raise ValueError(f"{path}: no 'q' field; not a form-quadruple file")
        fq = render.form_quadruple_from_json(obj)
        if isinstance(fq, SquareFormQuadruple):
            ok = verify_square_identity(fq)
            detail = {"identity": "square", "verified": ok}
        else:
            ok = verify_cubic_identity(fq)
            detail = {"identity": "cubic", "verified": ok}
            if ok and fq.seed is not None:
                detail["characterization"] = check_characterization(fq.seed, fq)
                ok = ok and detail["characterization"]
        return (OK if ok else VERIFICATION_FAILED), _emit({"file": str(path), **detail})

    # JSON-lines solutions file
    failures: list[str] = []
    count = 0
    for lineno, line in enumerate(stripped.splitlines(), start=1):
        if not line.strip():
            continue
        count += 1
        try:
            verify_record(SolutionRecord.from_json(json.loads(line)))
        except (ValueError, KeyError) as exc:
            failures.append(f"line {lineno}: {exc}")
    ok = not failures
    return (OK if ok else VERIFICATION_FAILED), _emit(
        {"file": str(path), "records": count, "verified": ok, "failures": failures}
    )


def cmd_relation(args) -> tuple[int, str]:
    seed = CubicQuadruple(*_parse_csv_ints(args.seed, 4, "--seed"))
    mode = parse_mode(args.mode)
    fq, _ = content_reduce(sandor_generate(seed))
    cq = build_relation(fq, mode)
    out = render.combo_quadruple_to_json(cq)
    latex = render.combo_quadruple_latex(cq)
    if args.expand or args.factor:
        identity = expand_relation(cq)
        out["expanded"] = render.poly_identity_to_json(identity)
        latex = render.poly_identity_latex(identity)
        if args.factor:
            quotient, divisor = factor_common_root(identity)
            out["factored"] = render.poly_identity_to_json(quotient)
            out["factored"]["divisor"] = render.poly_to_json(divisor)
            latex = render.poly_identity_latex(quotient)
    if args.latex:
        return OK, latex
    return OK, _emit(out)


def cmd_quad(args) -> tuple[int, str]:
    if args.construction in ("piezas", "equal-sums") and args.eval_at is not None:
        raise ValueError("--eval applies to quadruple and triple constructions")
    if args.construction == "piezas":
        seed = PythagoreanQuadruple(args.values[0], args.values[1], args.values[2], args.values[3])
        if args.degenerate is not None:
            forms = piezas_degenerate_triple(seed, args.degenerate)
            if args.latex:
                return OK, render.power_display([render.form_to_latex(f) for f in forms], 2)
            return OK, _emit(
                {
                    "identity": "pythagorean-triple",
                    "q": [render.form_to_json(f) for f in forms],
                    "seed": list(seed.as_tuple),
                    "e": str(args.degenerate),
                }
            )
        sq = piezas_generate(seed)
        if args.latex:
            return OK, render.square_forms_latex(sq)
        return OK, _emit(render.form_quadruple_to_json(sq))

    if args.construction == "quadruple":
        combos = powersum_quadruple(args.values[0])
    elif args.construction == "triple":
        combos = powersum_triple(args.values[0], args.values[1])
    else:  # equal-sums
        (a, b), (c, d) = equal_sums_family(args.values[0])
        if args.latex:
            def fmt(x: int) -> str:
                return f"({x})" if x < 0 else str(x)

            return OK, f"{fmt(a)}^2 + {fmt(b)}^2 = {fmt(c)}^2 + {fmt(d)}^2"
        return OK, _emit(
            {
                "u": str(args.values[0]),
                "lhs": [str(a), str(b)],
                "rhs": [str(c), str(d)],
                "sum": str(a * a + b * b),
            }
        )

    scaled, factor = extract_common_factor(combos)
    out = {
        "construction": args.construction,
        "args": args.values,
        "combos": [render.combo_to_json(c) for c in scaled],
        "common_factor": render.fraction_to_json(factor),
    }
    if args.eval_at is not None:
        out["values"] = [str(c.evaluate(args.eval_at)) for c in scaled]
    if args.latex:
        return OK, render.power_display([render.combo_to_latex(c) for c in scaled], 2)
    return OK, _emit(out)


def cmd_search(args) -> tuple[int, str]:
    cfg = SearchConfig.from_file(args.config)
    if args.force:
        cfg = SearchConfig(
            seeds=cfg.seeds,
            u_range=cfg.u_range,
            v_range=cfg.v_range,
            modes=cfg.modes,
            dedupe=cfg.dedupe,
            output=cfg.output,
            force=True,
        )
    stats = SearchStats()
    records = run_search(cfg, stats=stats, threads=args.threads)
    if cfg.output:
        count = write_records(records, cfg.output)
        summary = {
            "output": cfg.output,
            "records": count,
            "evaluated": stats.evaluated,
            "degenerate": stats.degenerate,
            "duplicates": stats.duplicates,
        }
        return OK, _emit(summary)
    lines = []
    for record in records:
        lines.append(json.dumps(record.to_json(), separators=(",", ":")))
    summary = {
        "records": stats.emitted,
        "evaluated": stats.evaluated,
        "degenerate": stats.degenerate,
        "duplicates": stats.duplicates,
    }
    print(_emit(summary), file=sys.stderr)
    return OK, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--latex", action="store_true", help="emit LaTeX instead of JSON")

    parser = argparse.ArgumentParser(
        prog="powersum-forge",
        description="Exact families of cubic and quadratic Diophantine identities "
        "from binary quadratic forms and power sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli number B_k")
    p.add_argument("k", type=int)
    p.set_defaults(handler=cmd_bernoulli)

    p = sub.add_parser("faulhaber", parents=[common], help="S_k as a polynomial in n")
    p.add_argument("k", type=int)
    p.set_defaults(handler=cmd_faulhaber)

    p = sub.add_parser("combo", parents=[common], help="closed-form power-sum combination")
    p.add_argument("op", choices=sorted(_COMBO_OPS))
    p.add_argument("args", type=int, nargs="+", help="exponent argument(s)")
    p.set_defaults(handler=cmd_combo)

    p = sub.add_parser("sandor", parents=[common], help="form quadruple from a cubic seed")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--reduce", action="store_true", help="divide out the joint content")
    p.add_argument("--subst", metavar="M11,M12,M21,M22", help="compose with a linear map")
    p.set_defaults(handler=cmd_sandor)

    p = sub.add_parser("verify", parents=[common], help="verify a quadruple or solutions file")
    p.add_argument("file")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("relation", parents=[common], help="power-sum relation from a seed")
    p.add_argument("--seed", required=True, metavar="A,B,C,D")
    p.add_argument("--mode", required=True, metavar="Q:k,m|F:k")
    p.add_argument("--expand", action="store_true", help="expand to polynomial identity")
    p.add_argument("--factor", action="store_true", help="strip common u^s (u+1)^t roots")
    p.set_defaults(handler=cmd_relation)

    p = sub.add_parser("quad", parents=[common], help="quadratic (square) constructions")
    p.add_argument("construction", choices=["piezas", "quadruple", "triple", "equal-sums"])
    p.add_argument("values", type=int, nargs="+")
    p.add_argument("--degenerate", type=int, metavar="E", help="piezas: collapse to a triple")
    p.add_argument("--eval", dest="eval_at", type=int, metavar="N", help="also evaluate at n=N")
    p.set_defaults(handler=cmd_quad)

    p = sub.add_parser("search", parents=[common], help="grid search over families")
    p.add_argument("--config", required=True)
    p.add_argument("--threads", type=int)
    p.add_argument("--force", action="store_true", help="override the lattice guardrail")
    p.set_defaults(handler=cmd_search)

    return parser


_QUAD_ARITY = {"piezas": 4, "quadruple": 1, "triple": 2, "equal-sums": 1}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "quad":
            expected = _QUAD_ARITY[args.construction]
            if len(args.values) != expected:
                raise ValueError(
                    f"quad {args.construction} takes {expected} integer argument(s)"
                )
        code, text = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

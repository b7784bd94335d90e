"""Command-line front end and report serialization.

Exit codes: 0 success, 2 unparseable input, 3 hypothesis violation (bad
field size, reducible prime, ramified prime, pole, zero element), 4
non-geometric instance refused without --force, 5 enumeration budget.
Reports are byte-identical given the same flags and seed: timing goes to
stderr, never into a report.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .artinschreier import (
    ASInstance,
    artin_schreier_degree_report,
    as_normalize,
    classify_infinite_place,
    ramified_finite_primes,
)
from .density import split_density
from .errors import (
    BudgetExceeded,
    NonGeometricExtension,
    ParseError,
    ReduciblePolynomial,
)
from .field import FieldCtx, is_prime
from .kummer import KummerInstance, kummer_degree_report
from .polyring import Poly, PrimePoly, RatFunc, count_irreducibles
from .symbols import hasse_symbol, power_residue_symbol
from .syntax import format_elem, format_poly, format_ratfunc, parse_poly, parse_ratfunc

SCHEMA_VERSION = 1


# ------------------------------------------------------------ field plumbing

def _prime_power(q):
    if q < 2:
        raise ValueError(f"q = {q} is not a prime power")
    for p in range(2, q + 1):
        if p * p > q:
            p = q
        if q % p == 0:
            e = 0
            rest = q
            while rest % p == 0:
                rest //= p
                e += 1
            if rest != 1 or not is_prime(p):
                raise ValueError(f"q = {q} is not a prime power")
            return p, e
    raise ValueError(f"q = {q} is not a prime power")


def _field_from_args(args, parser):
    if args.q is not None:
        if args.p is not None or args.e is not None:
            parser.error("give either --q or --p/--e, not both")
        p, e = _prime_power(args.q)
    elif args.p is not None:
        p, e = args.p, args.e or 1
    else:
        parser.error("a field is required: --q or --p [--e]")
    modulus = None
    if args.modulus:
        base = FieldCtx(p)
        modulus = parse_poly(base, args.modulus).coeffs
    return FieldCtx(p, e, modulus=modulus)


def _field_json(ctx):
    out = {"p": ctx.p, "e": ctx.e, "q": ctx.q}
    if ctx.e > 1:
        base = FieldCtx(ctx.p)
        out["modulus"] = format_poly(Poly(base, ctx.modulus))
    return out


def _split_elements(text):
    items = [s.strip() for s in text.split(",")]
    if any(not s for s in items):
        raise ParseError(0, "empty element in list")
    return items


def _parse_kummer_elements(ctx, text, m, rationalize):
    elems = []
    for s in _split_elements(text):
        r = parse_ratfunc(ctx, s)
        if r.is_poly:
            elems.append(r.as_poly())
        elif rationalize:
            # A/B and A*B^(m-1) generate the same degree-m radical extension
            elems.append(r.num * r.den ** (m - 1))
        else:
            raise ValueError(
                f"element {s!r} is not a polynomial; pass --rationalize to "
                f"replace A/B by A*B^(m-1)"
            )
    return elems


def _budget_from_args(args):
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("FFEXT_BUDGET")
    return int(env) if env else None


# ------------------------------------------------------------- serialization

def _unit_text(k, m):
    return f"exp(2πi·{k}/{m})"


def _frac(x):
    return f"{x.numerator}/{x.denominator}"


def _nf_json(nf):
    return {
        "local_parts": [
            {
                "prime": format_poly(prime.poly),
                "components": [
                    {"order": j, "component": format_poly(a)} for j, a in levels
                ],
            }
            for prime, levels in nf.local_parts
        ],
        "poly_part": [
            {"degree": n, "coefficient": format_elem(nf.ctx, c)}
            for n, c in nf.poly_part
        ],
        "const_trace": nf.const_trace,
        "value": format_ratfunc(nf.value()),
        "witness": format_ratfunc(nf.witness),
    }


def _kummer_report_json(rep):
    inst = rep.instance
    return {
        "kind": "kummer",
        "m": inst.m,
        "elements": [format_poly(d) for d in inst.elements],
        "support": [format_poly(pr.poly) for pr in rep.support],
        "matrix": [list(row) for row in rep.matrix],
        "kernel_basis": [list(v) for v in rep.kernel_basis],
        "kernel_dim": rep.kernel_dim,
        "trivial_combo_count": rep.trivial_combo_count,
        "degree": rep.degree,
        "geometric": rep.geometric,
        "witnesses": [
            {
                "vector": list(w.vector),
                "root": format_poly(w.root),
                "constant": format_elem(inst.ctx, w.constant),
            }
            for w in rep.witnesses
        ],
        "non_geometric_witnesses": [
            {
                "vector": list(w.vector),
                "root": format_poly(w.root),
                "constant": format_elem(inst.ctx, w.constant),
            }
            for w in rep.non_geometric_witnesses
        ],
        "seed": rep.seed,
    }


def _as_label_json(label):
    if label[0] == "prime":
        return ["prime", format_poly(label[1].poly), label[2], label[3]]
    return list(label)


def _as_report_json(rep):
    inst = rep.instance
    return {
        "kind": "artin-schreier",
        "elements": [format_ratfunc(d) for d in inst.elements],
        "normal_forms": [_nf_json(nf) for nf in rep.normal_forms],
        "column_labels": [_as_label_json(lab) for lab in rep.column_labels],
        "matrix": [list(row) for row in rep.matrix],
        "kernel_basis": [list(v) for v in rep.kernel_basis],
        "kernel_dim": rep.kernel_dim,
        "trivial_combo_count": rep.trivial_combo_count,
        "degree": rep.degree,
        "geometric": rep.geometric,
        "witnesses": [
            {
                "vector": list(w.vector),
                "preimage": format_ratfunc(w.preimage),
                "constant": format_elem(inst.ctx, w.constant),
            }
            for w in rep.witnesses
        ],
        "non_geometric_witnesses": [
            {
                "vector": list(w.vector),
                "preimage": format_ratfunc(w.preimage),
                "constant": format_elem(inst.ctx, w.constant),
            }
            for w in rep.non_geometric_witnesses
        ],
        "seed": rep.seed,
    }


def _density_row_json(row):
    return {
        "N": row.n,
        "pi": row.pi,
        "excluded": row.excluded,
        "split_count": row.split_count,
        "fraction": _frac(row.fraction),
        "fraction_float": float(row.fraction),
        "predicted": _frac(row.predicted),
        "deviation": _frac(row.deviation),
        "deviation_units": row.deviation_units,
        "class_counts": [list(c) for c in row.class_counts],
        "combo_character_sums": [
            {"vector": list(v), "coords": list(cs.coords)}
            for v, cs in row.combo_character_sums
        ],
    }


def _density_json(rep):
    if rep.kind == "kummer":
        inner = _kummer_report_json(rep.degree_report)
    else:
        inner = _as_report_json(rep.degree_report)
    return {
        "kind": rep.kind,
        "degree_report": inner,
        "degree": rep.degree,
        "trivial_combo_count": rep.trivial_combo_count,
        "geometric": rep.geometric,
        "warning": rep.warning,
        "n_values": list(rep.n_values),
        "rows": [_density_row_json(r) for r in rep.rows],
        "seed": rep.seed,
    }


def _density_table(rep):
    lines = [
        "N    pi        excluded  split     fraction              predicted  deviation"
    ]
    for r in rep.rows:
        frac = f"{_frac(r.fraction)} ({float(r.fraction):.6f})"
        lines.append(
            f"{r.n:<4d} {r.pi:<9d} {r.excluded:<9d} {r.split_count:<9d} "
            f"{frac:<21s} {_frac(r.predicted):<10s} "
            f"{float(r.deviation):.6f} ({r.deviation_units:.4f} units of q^(N/2)/N)"
        )
    return "\n".join(lines)


def _density_csv(rep):
    lines = [
        "N,pi,excluded,split_count,fraction,fraction_float,predicted,deviation,deviation_units"
    ]
    for r in rep.rows:
        lines.append(
            f"{r.n},{r.pi},{r.excluded},{r.split_count},{_frac(r.fraction)},"
            f"{float(r.fraction):.10f},{_frac(r.predicted)},{_frac(r.deviation)},"
            f"{r.deviation_units:.10f}"
        )
    return "\n".join(lines)


def _json_text(payload):
    return json.dumps(payload, indent=2, ensure_ascii=False)


def _wrap(command, ctx, body):
    out = {"schema_version": SCHEMA_VERSION, "command": command, "field": _field_json(ctx)}
    out.update(body)
    return out


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# ----------------------------------------------------------------- commands

def _cmd_degree(args, parser):
    ctx = _field_from_args(args, parser)
    if args.kind == "kummer":
        if args.m is None:
            parser.error("degree kummer requires --m")
        elems = _parse_kummer_elements(ctx, args.S, args.m, args.rationalize)
        rep = kummer_degree_report(KummerInstance(ctx, args.m, elems), seed=args.seed)
        body = _kummer_report_json(rep)
    else:
        elems = [parse_ratfunc(ctx, s) for s in _split_elements(args.S)]
        rep = artin_schreier_degree_report(ASInstance(ctx, elems), seed=args.seed)
        body = _as_report_json(rep)

    if args.format == "json":
        _emit(args, _json_text(_wrap("degree", ctx, body)))
        return
    lines = [
        f"field: F_{ctx.q}",
        f"kind: {args.kind}",
        f"elements: {', '.join(body['elements'])}",
        f"trivial_combo_count: {rep.trivial_combo_count}",
        f"kernel_dim: {rep.kernel_dim}",
        f"degree: {rep.degree}",
        f"geometric: {str(rep.geometric).lower()}",
    ]
    if rep.kernel_basis:
        lines.append("kernel basis:")
        for w in rep.witnesses:
            if args.kind == "kummer":
                lines.append(
                    f"  {list(w.vector)}: product = "
                    f"{format_elem(ctx, w.constant)} * ({format_poly(w.root)})^{rep.instance.m}"
                )
            else:
                lines.append(
                    f"  {list(w.vector)}: combo = F^{ctx.p} - F + "
                    f"{format_elem(ctx, w.constant)} with F = {format_ratfunc(w.preimage)}"
                )
    for w in rep.non_geometric_witnesses:
        if args.kind == "kummer":
            lines.append(
                f"non-geometric combo {list(w.vector)}: constant {format_elem(ctx, w.constant)} "
                f"is not an m-th power"
            )
        else:
            lines.append(
                f"non-geometric combo {list(w.vector)}: constant {format_elem(ctx, w.constant)} "
                f"has nonzero trace"
            )
    _emit(args, "\n".join(lines))


def _cmd_symbol(args, parser):
    ctx = _field_from_args(args, parser)
    prime = PrimePoly(parse_poly(ctx, args.P))
    if args.kind == "kummer":
        if args.m is None:
            parser.error("symbol kummer requires --m")
        if args.a is None:
            parser.error("symbol kummer requires --a")
        value = power_residue_symbol(parse_poly(ctx, args.a), prime, args.m)
        body = {
            "m": args.m,
            "element": args.a,
            "prime": format_poly(prime.poly),
            "value": str(value),
            "exponent": value.exponent,
            "unit": None if value.is_zero else _unit_text(value.exponent, args.m),
        }
        text = str(value) if value.is_zero else f"{value}\n{body['unit']}"
    else:
        if args.D is None:
            parser.error("symbol hasse requires --D")
        value = hasse_symbol(parse_ratfunc(ctx, args.D), prime)
        body = {
            "element": args.D,
            "prime": format_poly(prime.poly),
            "value": value.value,
            "split": value.is_split,
            "unit": _unit_text(value.value, ctx.p),
        }
        text = f"{value.value}\n{body['unit']}"
    if args.format == "json":
        _emit(args, _json_text(_wrap("symbol", ctx, body)))
    else:
        _emit(args, text)


def _cmd_density(args, parser):
    ctx = _field_from_args(args, parser)
    n_min, n_max = args.N_min, args.N_max
    if n_max is None:
        parser.error("density requires --N-max")
    if n_min < 1 or n_max < n_min:
        parser.error("need 1 <= N-min <= N-max")
    budget = _budget_from_args(args)
    if args.kind == "kummer":
        if args.m is None:
            parser.error("density kummer requires --m")
        elems = _parse_kummer_elements(ctx, args.S, args.m, args.rationalize)
        inst = KummerInstance(ctx, args.m, elems)
        exact = kummer_degree_report(inst, seed=args.seed)
    else:
        inst = ASInstance(ctx, [parse_ratfunc(ctx, s) for s in _split_elements(args.S)])
        exact = artin_schreier_degree_report(inst, seed=args.seed)
    if not exact.geometric and not args.force:
        w = (exact.non_geometric_witnesses or (None,))[0]
        detail = f" (combo {list(w.vector)})" if w else ""
        raise NonGeometricExtension(
            f"instance is not geometric{detail}; rerun with --force to measure anyway",
            witness=w,
        )

    rep = split_density(inst, range(n_min, n_max + 1), seed=args.seed, budget=budget)
    print(f"elapsed: {rep.elapsed_seconds:.2f}s", file=sys.stderr)

    table = _density_table(rep)
    if args.format == "csv":
        payload = _density_csv(rep)
    elif args.format == "json":
        payload = _json_text(_wrap("density", ctx, _density_json(rep)))
    else:
        payload = table
        if rep.warning:
            payload = f"warning: {rep.warning}\n{payload}"
    if args.output:
        _emit(args, payload)
        print(table)
    else:
        _emit(args, payload)


def _cmd_pi(args, parser):
    ctx = _field_from_args(args, parser)
    if args.N < 1:
        parser.error("--N must be >= 1")
    value = count_irreducibles(ctx, args.N)
    if args.format == "json":
        _emit(args, _json_text(_wrap("pi", ctx, {"N": args.N, "pi": value})))
    else:
        _emit(args, str(value))


def _cmd_normalize(args, parser):
    ctx = _field_from_args(args, parser)
    nf = as_normalize(parse_ratfunc(ctx, args.D), seed=args.seed)
    if args.format == "json":
        _emit(args, _json_text(_wrap("normalize", ctx, _nf_json(nf))))
        return
    lines = [f"value: {format_ratfunc(nf.value())}", f"witness: {format_ratfunc(nf.witness)}"]
    for prime, levels in nf.local_parts:
        comps = ", ".join(f"order {j}: {format_poly(a)}" for j, a in levels)
        lines.append(f"local at {format_poly(prime.poly)}: {comps}")
    if nf.poly_part:
        terms = ", ".join(
            f"degree {n}: {format_elem(ctx, c)}" for n, c in nf.poly_part
        )
        lines.append(f"poly part: {terms}")
    lines.append(f"const_trace: {nf.const_trace}")
    _emit(args, "\n".join(lines))


def _cmd_classify(args, parser):
    ctx = _field_from_args(args, parser)
    nf = as_normalize(parse_ratfunc(ctx, args.D), seed=args.seed)
    place = classify_infinite_place(nf)
    ramified = sorted(ramified_finite_primes(nf))
    if args.format == "json":
        body = {
            "classification": str(place),
            "ramified_finite_primes": [format_poly(pr.poly) for pr in ramified],
        }
        _emit(args, _json_text(_wrap("classify", ctx, body)))
        return
    names = ", ".join(format_poly(pr.poly) for pr in ramified) or "(none)"
    _emit(args, f"classification: {place}\nramified finite primes: {names}")


# ------------------------------------------------------------------- parser

def _add_field_args(sp):
    sp.add_argument("--q", type=int, help="field size, a prime power")
    sp.add_argument("--p", type=int, help="characteristic (with optional --e)")
    sp.add_argument("--e", type=int, help="extension degree over F_p")
    sp.add_argument("--modulus", help="monic degree-e polynomial in t over F_p")


def _add_common(sp, formats=("text", "json")):
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=formats, default="text")
    sp.add_argument("--output", help="write the report here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ffext",
        description="Degrees, symbols, and split densities for radical and "
        "root-of-x^p-x extensions of F_q(t).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("degree", help="exact extension degree with witnesses")
    sp.add_argument("kind", choices=["kummer", "artin-schreier"])
    _add_field_args(sp)
    sp.add_argument("--m", type=int, help="radical order (kummer only)")
    sp.add_argument("--S", required=True, help="comma-separated elements")
    sp.add_argument("--rationalize", action="store_true",
                    help="replace rational A/B by A*B^(m-1) (kummer)")
    _add_common(sp)
    sp.set_defaults(run=_cmd_degree)

    sp = sub.add_parser("symbol", help="one symbol value at one prime")
    sp.add_argument("kind", choices=["kummer", "hasse"])
    _add_field_args(sp)
    sp.add_argument("--m", type=int, help="symbol order (kummer only)")
    sp.add_argument("--a", help="polynomial argument (kummer)")
    sp.add_argument("--D", help="rational argument (hasse)")
    sp.add_argument("--P", required=True, help="monic irreducible prime")
    _add_common(sp)
    sp.set_defaults(run=_cmd_symbol)

    sp = sub.add_parser("density", help="exhaustive split-density measurement")
    sp.add_argument("kind", choices=["kummer", "artin-schreier"])
    _add_field_args(sp)
    sp.add_argument("--m", type=int, help="radical order (kummer only)")
    sp.add_argument("--S", required=True, help="comma-separated elements")
    sp.add_argument("--rationalize", action="store_true")
    sp.add_argument("--N-min", dest="N_min", type=int, default=1)
    sp.add_argument("--N-max", dest="N_max", type=int)
    sp.add_argument("--budget", type=int,
                    help="max monic candidates per degree (env FFEXT_BUDGET)")
    sp.add_argument("--force", action="store_true",
                    help="measure a non-geometric instance anyway")
    _add_common(sp, formats=("text", "json", "csv"))
    sp.set_defaults(run=_cmd_density)

    sp = sub.add_parser("pi", help="count monic irreducibles of one degree")
    _add_field_args(sp)
    sp.add_argument("--N", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(run=_cmd_pi)

    sp = sub.add_parser("normalize", help="canonical form modulo x^p - x")
    _add_field_args(sp)
    sp.add_argument("--D", required=True)
    _add_common(sp)
    sp.set_defaults(run=_cmd_normalize)

    sp = sub.add_parser("classify", help="infinite place and ramified primes")
    _add_field_args(sp)
    sp.add_argument("--D", required=True)
    _add_common(sp)
    sp.set_defaults(run=_cmd_classify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.run(args, parser)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 5
    except NonGeometricExtension as exc:
        print(f"non-geometric: {exc}", file=sys.stderr)
        return 4
    except ReduciblePolynomial as exc:
        print(
            f"hypothesis violation: {exc} (factor: {format_poly(exc.factor)})",
            file=sys.stderr,
        )
        return 3
    except ValueError as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())

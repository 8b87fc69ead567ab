"""Command-line surface: construction, verification, and reporting.

Every run is deterministic given its flags; seeds default to a fixed
constant rather than entropy.  Exit codes: 0 when the computation succeeds
and the checked property holds, 1 when the property fails, 2 on malformed
input.  Structured output is single-line JSON with sorted keys so reports
can be diffed byte for byte.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys

from .cancellation import (
    cc_by_coefficient_polys,
    cc_direct,
    cc_oracle,
    matrix_cc_test,
    sample_cc_phi_matrices,
)
from .diamond import (
    LINEARIZED,
    MONOMIAL,
    SCHEMA,
    DiamondSpec,
    PhiPoly,
    RootPair,
    factor_report,
)
from .ff import (
    DEFAULT_SEED,
    element_from_text,
    element_to_text,
    extension_field,
    is_irreducible,
    parse_field_spec,
    poly_from_text,
    poly_to_text,
)
from .linearized import (
    TwistedParams,
    embed_pair,
    evaluate_bilinear,
    is_normal,
    random_normal_element,
    staircase,
    staircase_normal_test,
    twisted_normal_predicate,
)


def _read_arg(value):
    """Inline string or, when it names an existing file, the file's content."""
    if "\n" not in value and ";" not in value and os.path.exists(value):
        with open(value, "r", encoding="utf-8") as fh:
            return fh.read()
    return value


def _load_poly(ctx, value):
    return poly_from_text(ctx, _read_arg(value))


def _load_phi(ctx, value):
    return PhiPoly.from_text(ctx, _read_arg(value))


def _emit(args, doc, text_lines):
    if args.format == "structured":
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_compose(args):
    base = parse_field_spec(args.q)
    f = _load_poly(base, args.f)
    g = _load_poly(base, args.g)
    phi = _load_phi(base, args.phi)
    pair = RootPair.build(f, g, seed=args.seed)
    product = DiamondSpec.from_phi(phi).bind(pair).composed()
    irreducible = is_irreducible(product)
    doc = {
        "schema": SCHEMA,
        "kind": "composed-product",
        "q": base.order,
        "f": poly_to_text(f),
        "g": poly_to_text(g),
        "degree": product.degree,
        "product": poly_to_text(product),
        "irreducible": irreducible,
    }
    _emit(args, doc, [
        f"product: {poly_to_text(product)}",
        f"degree: {product.degree}",
        f"irreducible: {str(irreducible).lower()}",
    ])
    return 0


def _applicable_routes(route, phi, m, n):
    coprime = math.gcd(m, n) == 1
    if route != "all":
        return [route]
    routes = ["direct", "oracle"]
    if phi.basis == MONOMIAL and coprime:
        routes += ["coeffs", "matrix"]
    return routes


def _cmd_check_cc(args):
    base = parse_field_spec(args.q)
    f = _load_poly(base, args.f)
    g = _load_poly(base, args.g)
    phi = _load_phi(base, args.phi)
    m, n = f.degree, g.degree
    pair = RootPair.build(f, g, seed=args.seed)
    spec = DiamondSpec.from_phi(phi)
    bd = spec.bind(pair)
    verdicts = {}
    for route in _applicable_routes(args.route, phi, m, n):
        if route == "direct":
            verdicts[route] = cc_direct(bd)
        elif route == "oracle":
            verdicts[route] = cc_oracle(bd)
        elif route == "coeffs":
            verdicts[route] = cc_by_coefficient_polys(f, g, phi)
        elif route == "matrix":
            verdicts[route] = matrix_cc_test(f, g, phi)
    answers = {r: v.holds for r, v in verdicts.items()}
    extras = {}
    if args.route == "all" and math.gcd(m, n) == 1:
        extras["irreducible-product"] = is_irreducible(bd.composed())
    if len(set(answers.values()) | set(extras.values())) > 1:
        raise RuntimeError(
            f"cancellation routes disagree: {answers | extras}"
        )
    holds = next(iter(answers.values()))
    doc = {
        "schema": SCHEMA,
        "kind": "cc-check",
        "q": base.order,
        "f": poly_to_text(f),
        "g": poly_to_text(g),
        "holds": holds,
        "routes": {r: v.to_doc() for r, v in verdicts.items()},
    }
    if extras:
        doc["cross_checks"] = extras
    lines = [f"conjugate cancellation: {'holds' if holds else 'fails'}"]
    for r, v in verdicts.items():
        detail = ""
        if v.witness is not None:
            w = v.witness
            detail = f" (witness k={w.k}, side={w.side}, orbit={w.orbit})"
        lines.append(f"  route {r}: {'holds' if v.holds else 'fails'}{detail}")
    for name, value in extras.items():
        lines.append(f"  cross-check {name}: {str(value).lower()}")
    _emit(args, doc, lines)
    return 0 if holds else 1


def _cmd_factor(args):
    base = parse_field_spec(args.q)
    f = _load_poly(base, args.f)
    g = _load_poly(base, args.g)
    phi = _load_phi(base, args.phi)
    report = factor_report(f, g, DiamondSpec.from_phi(phi), seed=args.seed)
    doc = report.to_doc()
    lines = [
        f"product: {poly_to_text(report.product)}",
        f"cc_holds: {str(report.cc_holds).lower()}",
        f"distinct factors: {report.distinct_factor_count}",
    ]
    for e in report.entries:
        lines.append(
            f"  orbit {e.orbit}: degree {e.degree}, multiplicity {e.multiplicity}, "
            f"min_poly {poly_to_text(e.min_poly)}"
        )
    _emit(args, doc, lines)
    return 0


def _cmd_sample_phi(args):
    base = parse_field_spec(args.q)
    f = _load_poly(base, args.f)
    g = _load_poly(base, args.g)
    phis = sample_cc_phi_matrices(f, g, args.count, seed=args.seed)
    doc = {
        "schema": SCHEMA,
        "kind": "phi-sample",
        "q": base.order,
        "f": poly_to_text(f),
        "g": poly_to_text(g),
        "count": args.count,
        "seed": args.seed,
        "phis": [phi.to_text() for phi in phis],
    }
    _emit(args, doc, [phi.to_text().rstrip("\n") + "\n" for phi in phis])
    return 0


def _cmd_normal(args):
    base = parse_field_spec(args.q)
    mod = _load_poly(base, args.mod)
    ctx = base.extension(mod)
    if args.random:
        elem = random_normal_element(ctx, seed=args.seed)
        doc = {
            "schema": SCHEMA,
            "kind": "normal",
            "field": f"{base.order}^{ctx.degree}",
            "element": element_to_text(elem),
            "normal": True,
        }
        _emit(args, doc, [element_to_text(elem)])
        return 0
    if args.element is None:
        raise ValueError("provide --element or --random")
    elem = element_from_text(ctx, args.element)
    verdict = is_normal(elem)
    doc = {
        "schema": SCHEMA,
        "kind": "normal",
        "field": f"{base.order}^{ctx.degree}",
        "element": element_to_text(elem),
        "normal": verdict,
    }
    _emit(args, doc, [f"normal: {str(verdict).lower()}"])
    return 0 if verdict else 1


def _cmd_staircase(args):
    base = parse_field_spec(args.q)
    phi = _load_phi(base, args.phi)
    if phi.basis != LINEARIZED:
        raise ValueError("staircase needs a linearized-basis phi")
    m, n = phi.m, phi.n
    ctx_m = extension_field(base, m, seed=args.seed)
    ctx_n = extension_field(base, n, seed=args.seed)
    rng = random.Random(args.seed)
    alpha = random_normal_element(ctx_m, rng=rng)
    beta = random_normal_element(ctx_n, rng=rng)
    a, b = embed_pair(alpha, beta, seed=args.seed)
    st = staircase(phi)
    verdict = staircase_normal_test(phi, a, b)
    direct = is_normal(evaluate_bilinear(phi, a, b))
    if verdict != direct:
        raise RuntimeError("staircase test disagrees with the direct normality check")
    doc = {
        "schema": SCHEMA,
        "kind": "staircase",
        "q": base.order,
        "m": m,
        "n": n,
        "staircase": poly_to_text(st.poly),
        "normal": verdict,
    }
    _emit(args, doc, [
        f"staircase: {poly_to_text(st.poly)}",
        f"value normal: {str(verdict).lower()}",
    ])
    return 0 if verdict else 1


def _cmd_twisted(args):
    try:
        q = int(args.q)
    except ValueError:
        q = parse_field_spec(args.q).order
    sign = {"plus": "+", "minus": "-", "+": "+", "-": "-"}[args.sign]
    params = TwistedParams(q=q, m=args.m, n=args.n, k=args.k, l=args.l, sign=sign)
    verdict = twisted_normal_predicate(params)
    doc = {
        "schema": SCHEMA,
        "kind": "twisted",
        "q": q,
        "m": args.m,
        "n": args.n,
        "k": args.k,
        "l": args.l,
        "sign": sign,
        "normal": verdict,
    }
    _emit(args, doc, [f"normal on normal pairs: {str(verdict).lower()}"])
    return 0 if verdict else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="compoz",
        description="composed products over finite fields, cancellation checks, "
        "and normal-element tools",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, phi=False, fg=False, mod=False):
        p.add_argument("--q", required=True, help="field spec: 'p' or 'p^e:modulus'")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument(
            "--format", choices=("text", "structured"), default="text"
        )
        if fg:
            p.add_argument("--f", required=True, help="polynomial, inline or a file path")
            p.add_argument("--g", required=True, help="polynomial, inline or a file path")
        if phi:
            p.add_argument(
                "--phi",
                required=True,
                help="phi matrix ('q m n basis' header plus rows), inline with ';' or a file path",
            )
        if mod:
            p.add_argument("--mod", required=True, help="extension modulus polynomial")

    p = sub.add_parser("compose", help="compute the composed product f diamond g")
    common(p, phi=True, fg=True)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("check-cc", help="decide conjugate cancellation")
    common(p, phi=True, fg=True)
    p.add_argument(
        "--route",
        choices=("direct", "oracle", "coeffs", "matrix", "all"),
        default="all",
    )
    p.set_defaults(func=_cmd_check_cc)

    p = sub.add_parser("factor", help="factor structure of the composed product")
    common(p, phi=True, fg=True)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("sample-phi", help="sample phi matrices with cancellation")
    common(p, fg=True)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=_cmd_sample_phi)

    p = sub.add_parser("normal", help="test or sample normal elements")
    common(p, mod=True)
    p.add_argument("--element", help="element coordinates, '/'-separated")
    p.add_argument("--random", action="store_true")
    p.set_defaults(func=_cmd_normal)

    p = sub.add_parser("staircase", help="staircase normality of a bilinear phi")
    common(p, phi=True)
    p.set_defaults(func=_cmd_staircase)

    p = sub.add_parser("twisted", help="normality of the twisted binomial product")
    p.add_argument("--q", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--sign", choices=("plus", "minus", "+", "-"), default="plus")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=_cmd_twisted)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (0, None) else 2
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError, KeyError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

"""Batch command line interface with machine readable reports.

Every subcommand prints a self-describing report (JSON by default, plain
text with --format text).  Exit codes: 0 success, 1 usage error, 2 invalid
input (violation codes listed in the report), 3 a computation touched the
documented internal discrepancy between the two printed character recipes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import characters, cohomology, langlands, membership, quadforms, tableaux
from .params import (
    ArthurParameter,
    DiscreteBlock,
    UnipotentBlock,
    char_from_name,
    char_name,
    enumerate_params,
    validate,
)
from .weights import HighestWeight, inf_char_of_weight, pi_nm, sigma_nk

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class ValidationError(Exception):
    def __init__(self, message: str, violations: list[str] | None = None):
        super().__init__(message)
        self.violations = violations or []


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 on usage problems, not argparse's 2
        raise UsageError(message)


# --- parameter wire format ---------------------------------------------------


def param_to_json(psi: ArthurParameter) -> dict[str, Any]:
    return {
        "n": psi.n,
        "unipotent": [{"char": char_name(b.char), "dim": b.dim} for b in psi.unipotent],
        "discrete": [{"t": b.t, "a": b.a} for b in psi.discrete],
    }


def _strict_keys(obj: dict, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise ValidationError(
            f"unknown fields in {where}: {sorted(unknown)}",
            [f"UNKNOWN_FIELD:{k}" for k in sorted(unknown)],
        )


def param_from_json(obj: Any) -> ArthurParameter:
    if not isinstance(obj, dict):
        raise ValidationError("parameter must be a JSON object", ["BLOCK_SHAPE"])
    _strict_keys(obj, {"n", "unipotent", "discrete"}, "parameter")
    try:
        unip = tuple(
            UnipotentBlock(char_from_name(b["char"]), int(b["dim"]))
            for b in obj.get("unipotent", ())
        )
        disc = tuple(
            DiscreteBlock(int(b["t"]), int(b["a"])) for b in obj.get("discrete", ())
        )
        for b in obj.get("unipotent", ()):
            _strict_keys(b, {"char", "dim"}, "unipotent block")
        for b in obj.get("discrete", ()):
            _strict_keys(b, {"t", "a"}, "discrete block")
        psi = ArthurParameter(int(obj["n"]), unip, disc)
    except ValidationError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed parameter: {exc}", ["BLOCK_SHAPE"]) from exc
    violations = validate(psi)
    if violations:
        raise ValidationError(f"invalid parameter: {violations}", violations)
    return psi


def _load_param(spec: str) -> ArthurParameter:
    text = spec
    if not spec.lstrip().startswith("{"):
        try:
            with open(spec, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read parameter file: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"parameter is not valid JSON: {exc}") from exc
    return param_from_json(obj)


def _character_to_json(char: characters.PacketCharacter) -> dict[str, Any]:
    blocks = []
    for b in char.blocks:
        if isinstance(b, UnipotentBlock):
            blocks.append({"char": char_name(b.char), "dim": b.dim})
        else:
            blocks.append({"t": b.t, "a": b.a})
    return {
        "whittaker": char.whittaker,
        "blocks": blocks,
        "signs": list(char.signs),
        "flags": list(char.flags),
    }


def _halfvec_to_json(vec: cohomology.HalfIntVector) -> dict[str, Any]:
    return {"doubled": list(vec.doubled), "half": True}


# --- subcommand handlers ------------------------------------------------------


def _cmd_enumerate(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    n = args.n
    if args.family == "pi":
        label, value = "m", args.value
        chi = inf_char_of_weight(pi_nm(n, value))
        packets = membership.enumerate_packets_pi(n, value)
    else:
        label, value = "k", args.value
        chi = inf_char_of_weight(sigma_nk(n, value))
        packets = membership.enumerate_packets_sigma(n, value)
    considered = enumerate_params(chi, n)
    results = {
        "inf_char": list(chi.entries),
        "parameters_with_inf_char": len(considered),
        "packets": [
            {
                "parameter": param_to_json(psi),
                "route": verdict.route,
                "multiplicity": verdict.multiplicity,
            }
            for psi, verdict in packets
        ],
    }
    return _report(f"enumerate-{args.family}", {"n": n, label: value}, results), 0


def _cmd_decide(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    psi = _load_param(args.param)
    inputs: dict[str, Any] = {"parameter": param_to_json(psi)}
    if args.pi is not None:
        inputs["pi_m"] = args.pi
        verdict = membership.decide_pi(psi, psi.n, args.pi)
        results = {
            "member": verdict.member,
            "route": verdict.route,
            "multiplicity": verdict.multiplicity,
            "oracle_agrees": membership.decide_pi_recursive(psi, psi.n, args.pi)
            == verdict.member,
        }
    elif args.sigma is not None:
        inputs["sigma_k"] = args.sigma
        verdict = membership.decide_sigma(psi, psi.n, args.sigma)
        results = {
            "member": verdict.member,
            "route": verdict.route,
            "multiplicity": verdict.multiplicity,
        }
    else:
        inputs["regular_a"] = args.regular
        results = {"member": membership.decide_regular(psi, args.regular)}
    return _report("decide", inputs, results), 0


def _match_table_row(
    psi: ArthurParameter, which: str, m_table: int, delta: int
) -> characters.PacketCharacter | None:
    """Printed-table row housing this purely unipotent parameter, if any."""
    from collections import Counter

    for form, tau_prime in (("first", 0), ("second", 1)):
        expected = characters.rho_theta_parameter(psi.n, m_table, tau_prime)
        if Counter(psi.unipotent) == Counter(expected):
            return characters.rho_unipotent_table(form, psi.n, m_table, which, delta)
    return None


def _cmd_rho(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    psi = _load_param(args.param)
    delta = args.whittaker
    inputs = {
        "parameter": param_to_json(psi),
        "module": args.module,
        "whittaker": delta,
    }
    if args.module == "pi":
        if args.m is None:
            raise UsageError("--m is required with --module pi")
        inputs["m"] = args.m
        char = characters.rho_pi_general(psi, psi.n, args.m, delta)
        route = membership.decide_pi(psi, psi.n, args.m).route
        which, m_table = (
            ("sigma_star", args.m - 1)
            if route == membership.ROUTE_II_A3
            else ("pi_star", args.m)
        )
    else:
        if args.k is None:
            raise UsageError("--k is required with --module sigma")
        inputs["k"] = args.k
        char = characters.rho_sigma_general(psi, psi.n, args.k, delta)
        if 2 * args.k == psi.n:
            route = membership.decide_pi(psi, psi.n, args.k + 1).route
            which, m_table = (
                ("sigma_star", args.k)
                if route == membership.ROUTE_II_A3
                else ("pi_star", args.k + 1)
            )
        else:
            which, m_table = "sigma_star", args.k
    results: dict[str, Any] = {"character": _character_to_json(char)}
    code = 0
    if not psi.discrete and len(psi.unipotent) == 3 and m_table >= 1:
        row = _match_table_row(psi, which, m_table, delta)
        if row is not None and not row.flags and not char.flags:
            agrees = characters.char_equivalent(char, row)
            results["table_row"] = _character_to_json(row)
            results["table_row_which"] = which
            results["table_agrees"] = agrees
            if not agrees:
                results["discrepancy"] = (
                    "the two printed character recipes disagree on this row; "
                    "reported as-is"
                )
                code = 3
    return _report("rho", inputs, results), code


def _cmd_invariants(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    p, q = args.p, args.q
    deltas = [args.delta] if args.delta else [1, -1]
    results: dict[str, Any] = {
        "det_class": quadforms.det_class(p, q),
        "discriminant": quadforms.discriminant(p, q),
        "hasse": {str(d): quadforms.hasse_normalized(p, q, d) for d in deltas},
    }
    if (p + q) % 2 == 0:
        chars = []
        for d in deltas:
            for c in quadforms.o_characters(p, q, d):
                chars.append(
                    {
                        "eta": char_name(c.eta),
                        "tau": c.tau,
                        "delta": c.delta,
                        "restriction": list(c.restriction),
                        "first_occurrence": quadforms.first_occurrence(c, p, q),
                    }
                )
        results["characters"] = chars
    return _report("invariants", {"p": p, "q": q}, results), 0


_HOWE_CHAR = {"triv": (0, 0), "det": (0, 1), "sgn": (1, 0), "sgn-det": (1, 1)}


def _cmd_howe(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    p, q, n, delta = args.p, args.q, args.rank, args.delta or 1
    if (p + q) % 2 != 0:
        raise ValidationError("p + q must be even")
    if args.char is not None:
        eta, tau = _HOWE_CHAR[args.char]
    else:
        if args.eta is None or args.tau is None:
            raise UsageError("give either --char or both --eta and --tau")
        eta, tau = char_from_name(args.eta), args.tau
    match = [
        c
        for c in quadforms.o_characters(p, q, delta)
        if c.eta == eta and c.tau == tau
    ]
    if not match:
        raise ValidationError("no such character on this group")
    c = match[0]
    ktype = quadforms.howe_ktype(c, p, q, n)
    results: dict[str, Any] = {
        "first_occurrence": quadforms.first_occurrence(c, p, q),
        "restriction": list(c.restriction),
        "ktype": list(ktype) if ktype is not None else None,
    }
    if ktype is not None:
        results["degree"] = quadforms.howe_degree(ktype, p, q)
    inputs = {
        "p": p,
        "q": q,
        "eta": char_name(eta),
        "tau": tau,
        "rank": n,
        "delta": delta,
    }
    return _report("howe", inputs, results), 0


def _cmd_standard(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    if args.family == "pi":
        sm = langlands.standard_pi(args.n, args.value)
    else:
        sm = langlands.standard_sigma(args.n, args.value)
    results = {
        "exponents": [{"sgn_power": s, "exponent": e} for s, e in sm.exponents],
        "base": sm.base_label,
        "max_exponent": langlands.max_exponent(sm),
    }
    inputs = {"family": args.family, "n": args.n, "value": args.value}
    return _report("standard", inputs, results), 0


def _cmd_tableau(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    tab = tableaux.av_scalar(args.n, args.m)
    results = {
        "rows": tableaux.render_tableau(tab),
        "chain_index": tableaux.chain_index(tab, args.n),
        "boxes": tab.boxes,
        "violations": tableaux.validate_tableau(tab, args.n),
    }
    return _report("tableau", {"n": args.n, "m": args.m}, results), 0


def _cmd_cohind(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    n, p, q = args.n, args.p, args.q
    data = cohomology.rho_vectors(n, p, q)
    results: dict[str, Any] = {
        "delta_l": _halfvec_to_json(data.delta_l),
        "delta_up": _halfvec_to_json(data.delta_up),
        "delta_uk": _halfvec_to_json(data.delta_uk),
        "delta_u": _halfvec_to_json(data.delta_u),
        "delta_pq": _halfvec_to_json(data.delta_pq),
        "S": data.S,
    }
    inputs: dict[str, Any] = {"n": n, "p": p, "q": q}
    if args.t is not None:
        inputs["t"] = args.t
        results["lambda"] = _halfvec_to_json(cohomology.lambda_of(n, p, q, args.t))
        results["weakly_fair"] = cohomology.weakly_fair(args.t)
        if args.scalar_m is not None:
            inputs["scalar_m"] = args.scalar_m
            results["scalar_ktype_inequality"] = cohomology.ktype_inequality_scalar(
                args.scalar_m, p, q, args.t
            )
        if args.weight:
            mu = HighestWeight(tuple(int(x) for x in args.weight.split(",")))
            inputs["weight"] = list(mu.entries)
            results["ktype_inequality"] = cohomology.ktype_inequality_general(
                mu, n, p, q, args.t
            )
    return _report("cohind", inputs, results), 0


# --- plumbing -----------------------------------------------------------------


def _report(command: str, inputs: dict[str, Any], results: dict[str, Any]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }


def _print_report(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    print(f"# {report['command']}")
    for section in ("inputs", "results"):
        print(f"[{section}]")
        for key, value in report[section].items():
            print(f"  {key} = {_render_value(value)}")


def _render_value(value: Any) -> str:
    if isinstance(value, dict) and {"n", "unipotent", "discrete"} <= set(value):
        unip = [
            f"{b['char']}⊠R[{b['dim']}]" for b in value["unipotent"]
        ]
        disc = [f"δ_{b['t']}⊠R[{b['a']}]" for b in value["discrete"]]
        return " ⊕ ".join(disc + unip) + f"  (n={value['n']})"
    return json.dumps(value, sort_keys=True)


def build_parser() -> _Parser:
    parser = _Parser(prog="sympacket", description=__doc__)
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="cmd", required=True)

    for family, label in (("pi", "m"), ("sigma", "k")):
        sp = sub.add_parser(f"enumerate-{family}")
        sp.add_argument("n", type=int)
        sp.add_argument("value", metavar=label, type=int)
        sp.set_defaults(func=_cmd_enumerate, family=family)

    sp = sub.add_parser("decide")
    sp.add_argument("--param", required=True, help="parameter file or inline JSON")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--pi", type=int, metavar="M")
    group.add_argument("--sigma", type=int, metavar="K")
    group.add_argument("--regular", type=int, metavar="A")
    sp.set_defaults(func=_cmd_decide)

    sp = sub.add_parser("rho")
    sp.add_argument("--param", required=True)
    sp.add_argument("--module", choices=("pi", "sigma"), required=True)
    sp.add_argument("--m", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--whittaker", type=int, choices=(1, -1), default=1)
    sp.set_defaults(func=_cmd_rho)

    sp = sub.add_parser("invariants")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--delta", type=int, choices=(1, -1))
    sp.set_defaults(func=_cmd_invariants)

    sp = sub.add_parser("howe")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--char", choices=tuple(_HOWE_CHAR))
    sp.add_argument("--eta", choices=("triv", "sgn"))
    sp.add_argument("--tau", type=int, choices=(0, 1))
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--delta", type=int, choices=(1, -1))
    sp.set_defaults(func=_cmd_howe)

    sp = sub.add_parser("standard")
    sp.add_argument("family", choices=("pi", "sigma"))
    sp.add_argument("n", type=int)
    sp.add_argument("value", type=int)
    sp.set_defaults(func=_cmd_standard)

    sp = sub.add_parser("tableau")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    sp.set_defaults(func=_cmd_tableau)

    sp = sub.add_parser("cohind")
    sp.add_argument("n", type=int)
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--scalar-m", type=int)
    sp.add_argument("--weight", help="comma separated highest weight entries")
    sp.set_defaults(func=_cmd_cohind)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report, code = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "error": str(exc),
            "violations": exc.violations,
        }
        print(json.dumps(payload, indent=2, sort_keys=True), file=sys.stderr)
        return 2
    except ValueError as exc:
        payload = {"schema_version": SCHEMA_VERSION, "error": str(exc), "violations": []}
        print(json.dumps(payload, indent=2, sort_keys=True), file=sys.stderr)
        return 2
    _print_report(report, args.format)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

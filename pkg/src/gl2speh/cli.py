"""Command-line interface.

Three verbs:

* ``verify``      — run the ordered check battery at one parameter point.
* ``sweep``       — run the battery over a cartesian grid of points.
* ``show-model``  — print the structure of the block model at one point.

Parameters come from ``--config`` (a flat JSON file) and/or individual
flags, with flags taking precedence. Reports render as Markdown (default)
or JSON; both renderings are deterministic, so the same invocation always
produces byte-identical output.

Exit status: 0 when every executed check passed, 1 when some check failed,
2 for usage errors (malformed arguments, a non-regular character, a grid
point that does not define a model, or a work estimate over the limit
without ``--allow-large``).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from .characters import MultChar
from .cyclotomic import CycNum, cyc_repr, root_of_unity
from .depthzero import DivisionParams
from .finite_field import FieldTower
from .speh import (
    CHECK_ORDER,
    build_ps_model,
    check_applicable,
    sp_character,
    theta_operator,
    verify_suite,
)

LARGE_COST_LIMIT = 1200

# checks whose work scales with the full block model, not just the field
MODEL_CHECKS = frozenset(
    {
        "projector",
        "dimensions",
        "equivariance",
        "pairing",
        "sp_odd",
        "t_chain",
        "remark",
        "candidates",
    }
)

_POINT_KEYS = ("p", "f", "n", "d", "theta_exponent")


class UsageError(Exception):
    """Bad invocation: reported on stderr with exit status 2."""


# -- parameter handling ---------------------------------------------------------


def _parse_theta_pi(text: str) -> CycNum:
    """Accept an integer ('1', '-1', '2') or 'k/L' meaning the k-th power of
    the primitive L-th root of unity."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            k, L = int(num), int(den)
        except ValueError as exc:
            raise UsageError(f"cannot parse root of unity {text!r}: use 'k/L'") from exc
        if L < 1:
            raise UsageError("root-of-unity order must be positive")
        return root_of_unity(L, k)
    try:
        return CycNum.rational(int(text))
    except ValueError as exc:
        raise UsageError(f"cannot parse scalar {text!r}") from exc


def _coerce_theta_pi(value) -> CycNum:
    """Config files may give the central scalar as an integer, a 'k/L'
    string, or an (order, exponent) pair."""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise UsageError("central-scalar pair must be (order, exponent)")
        try:
            order, exponent = int(value[0]), int(value[1])
        except (TypeError, ValueError) as exc:
            raise UsageError("central-scalar pair must hold integers") from exc
        if order < 1:
            raise UsageError("root-of-unity order must be positive")
        return root_of_unity(order, exponent)
    if isinstance(value, int):
        return CycNum.rational(value)
    return _parse_theta_pi(str(value))


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise UsageError("config file must contain a JSON object")
    return cfg


def _merge_point_config(cfg: dict, args: argparse.Namespace) -> dict:
    merged = dict(cfg)
    for key in _POINT_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val
    if getattr(args, "theta_pi", None) is not None:
        merged["theta_pi"] = args.theta_pi
    return merged


def _build_point(cfg: dict) -> DivisionParams:
    missing = [k for k in _POINT_KEYS if k not in cfg]
    if missing:
        raise UsageError(f"missing parameters: {', '.join(missing)}")
    try:
        p, f, n, d = (int(cfg[k]) for k in ("p", "f", "n", "d"))
        e = int(cfg["theta_exponent"])
    except (TypeError, ValueError) as exc:
        raise UsageError(f"parameters must be integers: {exc}") from exc
    scalar = _coerce_theta_pi(cfg.get("theta_pi", "1"))
    try:
        tower = FieldTower(p, f, n)
        theta = MultChar(tower, d, e)
        return DivisionParams(tower, d, theta, scalar)
    except (ValueError, ArithmeticError) as exc:
        raise UsageError(f"invalid parameter point: {exc}") from exc


def _selected_checks(args: argparse.Namespace, cfg: dict) -> list[str] | None:
    selected = list(args.check) if args.check else None
    if selected is None and isinstance(cfg.get("checks"), list):
        selected = [str(c) for c in cfg["checks"]]
    if selected is not None:
        unknown = [c for c in selected if c not in CHECK_ORDER]
        if unknown:
            raise UsageError(
                f"unknown checks: {', '.join(unknown)} (known: {', '.join(CHECK_ORDER)})"
            )
    return selected


def _cost_gate(params: DivisionParams, selected: list[str] | None, allow_large: bool) -> None:
    names = [c for c in CHECK_ORDER if selected is None or c in selected]
    names = [c for c in names if check_applicable(c, params, params)]
    if not names:
        return
    cost = params.tower.level_order(params.tower.n)
    if any(c in MODEL_CHECKS for c in names):
        cost *= params.d * params.d
    if cost > LARGE_COST_LIMIT and not allow_large:
        raise UsageError(
            f"estimated work {cost} exceeds the limit {LARGE_COST_LIMIT}; "
            "pass --allow-large to proceed"
        )


# -- rendering ------------------------------------------------------------------


def _render_json(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _md_escape(text: str) -> str:
    return str(text).replace("|", "\\|").replace("\n", " ")


def _md_kv_lines(data: dict, indent: int = 0) -> list[str]:
    lines = []
    pad = "  " * indent
    for key in sorted(data, key=str):
        val = data[key]
        if isinstance(val, dict):
            lines.append(f"{pad}- {key}:")
            lines.extend(_md_kv_lines(val, indent + 1))
        else:
            lines.append(f"{pad}- {key}: {val}")
    return lines


def _md_check_table(checks: list[dict]) -> list[str]:
    lines = [
        "| check | status | left | right | detail |",
        "| --- | --- | --- | --- | --- |",
    ]
    for c in checks:
        status = "pass" if c["passed"] else "FAIL"
        lines.append(
            "| {} | {} | {} | {} | {} |".format(
                _md_escape(c["name"]),
                status,
                _md_escape(c["lhs"]),
                _md_escape(c["rhs"]),
                _md_escape(c["detail"]),
            )
        )
    return lines


def _render_report_markdown(data: dict) -> str:
    lines = ["# verification report", "", "## parameters", ""]
    lines.extend(_md_kv_lines(data["params"]))
    lines += ["", "## conventions", ""]
    lines.extend(_md_kv_lines(data["conventions"]))
    lines += ["", "## checks", ""]
    lines.extend(_md_check_table(data["checks"]))
    lines += ["", f"**result: {'PASS' if data['passed'] else 'FAIL'}**", ""]
    return "\n".join(lines)


def _render_sweep_markdown(data: dict) -> str:
    lines = ["# sweep report", ""]
    if not data["points"]:
        lines += ["no grid points.", ""]
    for k, pt in enumerate(data["points"]):
        cfg = pt["point"]
        head = ", ".join(f"{key}={cfg[key]}" for key in sorted(cfg))
        lines += [f"## point {k}: {head}", ""]
        lines.extend(_md_check_table(pt["report"]["checks"]))
        lines.append("")
    lines += [f"**result: {'PASS' if data['passed'] else 'FAIL'}**", ""]
    return "\n".join(lines)


def _render_model_markdown(data: dict) -> str:
    lines = ["# block model", "", "## parameters", ""]
    lines.extend(_md_kv_lines(data["params"]))
    lines += ["", "## blocks", ""]
    lines += [
        "| block | first exponent | second exponent |",
        "| --- | --- | --- |",
    ]
    for blk in data["blocks"]:
        lines.append(
            f"| ({blk['block'][0]}, {blk['block'][1]}) | {blk['exponents'][0]} | {blk['exponents'][1]} |"
        )
    lines += ["", "## shift matrix on the eigenvector span", ""]
    for row in data["theta_on_whittaker"]:
        lines.append("| " + " | ".join(_md_escape(v) for v in row) + " |")
    lines += ["", "## symplectic-type summand", ""]
    lines.extend(_md_kv_lines(data["sp"]))
    lines += ["", "## dimensions", ""]
    lines.extend(_md_kv_lines(data["dimensions"]))
    lines.append("")
    return "\n".join(lines)


# -- verbs ----------------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _merge_point_config(_load_config(args.config), args)
    selected = _selected_checks(args, cfg)
    params = _build_point(cfg)
    _cost_gate(params, selected, args.allow_large)
    report = verify_suite(params, params, selected)
    data = report.as_dict()
    if args.output == "json":
        sys.stdout.write(_render_json(data))
    else:
        sys.stdout.write(_render_report_markdown(data))
    return 0 if report.passed else 1


def _expand_grid(cfg: dict) -> list[dict]:
    """Deterministic cartesian expansion of the grid keys. Integer values
    stand for one-element lists; theta_exponent may be 'all_regular'."""

    def as_list(key: str):
        if key not in cfg:
            raise UsageError(f"sweep config needs {key!r}")
        val = cfg[key]
        if isinstance(val, list):
            return val
        return [val]

    points = []
    theta_pi = cfg.get("theta_pi", "1")
    exps = cfg.get("theta_exponent")
    if exps is None:
        raise UsageError("sweep config needs 'theta_exponent'")
    for p, f, n, d in itertools.product(
        as_list("p"), as_list("f"), as_list("n"), as_list("d")
    ):
        if exps == "all_regular":
            try:
                q = int(p) ** int(f)
                order = q ** int(d) - 1
            except (TypeError, ValueError) as exc:
                raise UsageError(f"grid values must be integers: {exc}") from exc
            cands = []
            for e in range(1, order):
                orbit = {(e * pow(q, i, order)) % order for i in range(int(d))}
                if len(orbit) == int(d):
                    cands.append(e)
        elif isinstance(exps, list):
            cands = exps
        else:
            cands = [exps]
        for e in cands:
            points.append(
                {
                    "p": p,
                    "f": f,
                    "n": n,
                    "d": d,
                    "theta_exponent": e,
                    "theta_pi": theta_pi,
                }
            )
    return points


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    if not cfg:
        raise UsageError("sweep requires --config with the grid")
    selected = _selected_checks(args, cfg)
    grid = _expand_grid(cfg)
    out_points = []
    all_passed = True
    for point in grid:
        params = _build_point(point)
        _cost_gate(params, selected, args.allow_large)
        report = verify_suite(params, params, selected)
        all_passed = all_passed and report.passed
        out_points.append({"point": point, "report": report.as_dict()})
    data = {"points": out_points, "passed": all_passed}
    if args.output == "json":
        sys.stdout.write(_render_json(data))
    else:
        sys.stdout.write(_render_sweep_markdown(data))
    return 0 if all_passed else 1


def _cmd_show_model(args: argparse.Namespace) -> int:
    cfg = _merge_point_config(_load_config(args.config), args)
    params = _build_point(cfg)
    _cost_gate(params, None, args.allow_large)
    model = build_ps_model(params, params)
    op = theta_operator(model)
    M = op.matrix_on_whittaker()
    nb = len(model.blocks)
    matrix = [[cyc_repr(M.entry(r, c)) for c in range(nb)] for r in range(nb)]
    blocks = [
        {
            "block": list(blk),
            "exponents": [model.chi1[blk[0]].exponent, model.chi2[blk[1]].exponent],
        }
        for blk in model.blocks
    ]
    d = params.d
    sp_data: dict
    if model.d1 == model.d2:
        spc = sp_character(model)
        sp_data = {
            "kind": spc.kind,
            "dim": spc.dim,
            "orbit_offsets": str(spc.orbit_offsets),
        }
        if spc.candidates:
            sp_data["candidates"] = ", ".join(cyc_repr(c) for c in spc.candidates)
        if spc.half_orbit_matrix is not None:
            sp_data["half_orbit_matrix"] = str(spc.half_orbit_matrix)
    else:
        sp_data = {"kind": "not defined (rectangular grid)"}
    data = {
        "params": {
            "point": params.describe(),
            "tower": params.tower.describe(),
        },
        "blocks": blocks,
        "theta_on_whittaker": matrix,
        "sp": sp_data,
        "dimensions": {
            "full": model.d1 * model.d2,
            "sp": d * (d - 1) // 2,
            "st": d * (d - 1) // 2 + d,
        },
    }
    if args.output == "json":
        sys.stdout.write(_render_json(data))
    else:
        sys.stdout.write(_render_model_markdown(data))
    return 0


# -- entry point ----------------------------------------------------------------


def _add_point_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="flat JSON file with parameters")
    sub.add_argument("--p", type=int, help="odd prime")
    sub.add_argument("--f", type=int, help="base-field degree over the prime field")
    sub.add_argument("--n", type=int, help="tower degree over the base field")
    sub.add_argument("--d", type=int, help="block count (divides n)")
    sub.add_argument("--theta-exponent", type=int, dest="theta_exponent")
    sub.add_argument(
        "--theta-pi",
        dest="theta_pi",
        help="central scalar: an integer or 'k/L' for a root of unity",
    )


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--output", choices=("markdown", "json"), default="markdown", help="report format"
    )
    sub.add_argument(
        "--check",
        action="append",
        default=[],
        metavar="NAME",
        help="run only the named check (repeatable); known: " + ", ".join(CHECK_ORDER),
    )
    sub.add_argument(
        "--allow-large",
        action="store_true",
        help=f"permit points whose work estimate exceeds {LARGE_COST_LIMIT}",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gl2speh",
        description="exact verification of the block model and its twisted operators",
    )
    subs = parser.add_subparsers(dest="verb", required=True)

    v = subs.add_parser("verify", help="run the check battery at one point")
    _add_point_flags(v)
    _add_common_flags(v)
    v.set_defaults(func=_cmd_verify)

    s = subs.add_parser("sweep", help="run the battery over a parameter grid")
    s.add_argument("--config", required=False, help="JSON file with the grid")
    _add_common_flags(s)
    s.set_defaults(func=_cmd_sweep)

    m = subs.add_parser("show-model", help="print the block-model structure")
    _add_point_flags(m)
    _add_common_flags(m)
    m.set_defaults(func=_cmd_show_model)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        # an exact identity that must hold failed to hold
        print(f"hard failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command line surface: deterministic reports and serialized group arithmetic.

Exit codes: 0 success, 1 verified-property failure (including membership
violations), 2 input error.  JSON reports are byte-deterministic for fixed
inputs and seed, and embed the seed and package version.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from . import __version__
from .jacobi import JacobiElement, SplitVerdict, gamma_psi_member, jinv, jmul
from .mcg import pontryagin_parts, splitting_theorem_verdict
from .quadratic import QuadraticRefinement, expected_orbit_sizes, orbit_decomposition
from .symplectic import Covector, SymplecticMatrix
from .verify import VERIFY_RANK_LIMIT, run_suites

_INT64_MIN = -(1 << 63)
_INT64_MAX = (1 << 63) - 1


class CliInputError(ValueError):
    """Invalid command input; maps to exit code 2."""


def _encode_int(value: int):
    # decimal strings keep arbitrary-precision entries safe for 64-bit readers
    return value if _INT64_MIN <= value <= _INT64_MAX else str(value)


def _decode_int(value: Any) -> int:
    if isinstance(value, bool):
        raise CliInputError("expected an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        body = value[1:] if value[:1] in "+-" else value
        if body.isdigit():
            return int(value)
    raise CliInputError(f"expected an integer or decimal string, got {value!r}")


def element_to_document(g: JacobiElement) -> dict:
    return {
        "r": g.rank,
        "modulus": g.modulus,
        "x": [_encode_int(c) for c in g.x.coords],
        "A": [[_encode_int(e) for e in row] for row in g.a.rows],
    }


def element_from_document(doc: Any) -> JacobiElement:
    if not isinstance(doc, dict):
        raise CliInputError("element document must be a JSON object")
    missing = {"r", "modulus", "x", "A"} - set(doc)
    if missing:
        raise CliInputError(f"element document lacks keys: {sorted(missing)}")
    r = _decode_int(doc["r"])
    m = _decode_int(doc["modulus"])
    if r < 1:
        raise CliInputError("r must be a positive integer")
    if m < 0:
        raise CliInputError("modulus must be non-negative")
    x_raw, a_raw = doc["x"], doc["A"]
    if not isinstance(x_raw, list) or len(x_raw) != 2 * r:
        raise CliInputError("x must be a list of 2r entries")
    coords = tuple(_decode_int(c) for c in x_raw)
    if m and any(not 0 <= c < m for c in coords):
        raise CliInputError("x entries must lie in [0, modulus)")
    if not isinstance(a_raw, list) or len(a_raw) != 2 * r or any(
            not isinstance(row, list) or len(row) != 2 * r for row in a_raw):
        raise CliInputError("A must be a 2r x 2r matrix")
    rows = tuple(tuple(_decode_int(e) for e in row) for row in a_raw)
    try:
        a = SymplecticMatrix(rows)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    return JacobiElement(Covector(coords, m), a)


def _parse_psi(bits: str, r: int) -> QuadraticRefinement:
    if len(bits) != 2 * r or any(ch not in "01" for ch in bits):
        raise CliInputError(f"--psi must be a string of 2r = {2 * r} bits")
    return QuadraticRefinement(tuple(int(ch) for ch in bits))


def _report(command: str, parameters: dict, results: dict, seed: Optional[int] = None) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "results": results,
        "seed": seed,
        "version": __version__,
    }


def _render(report: dict, fmt: str, lines: list[str]) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True) + "\n"
    return "\n".join(lines) + "\n"


def _bits(values) -> str:
    return "".join(str(b) for b in values)


def _cmd_orbits(args) -> tuple[int, str]:
    r = args.r
    if not 1 <= r <= 8:
        raise CliInputError("--r must lie in 1..8")
    rep = orbit_decomposition(r)
    exp = expected_orbit_sizes(r)
    labels = tuple(c.arf_label for c in rep.orbits)
    sizes = tuple(c.size for c in rep.orbits)
    passed = labels == (0, 1) and sizes == exp
    results = {
        "rank": r,
        "orbits": [
            {"arf": c.arf_label, "size": c.size,
             "representative": list(c.representative.basis_values)}
            for c in rep.orbits
        ],
        "expected_sizes": list(exp),
        "pass": passed,
    }
    lines = [f"orbits  r={r}  version={__version__}",
             "arf  size  expected  representative"]
    for c, e in zip(rep.orbits, exp):
        lines.append(f"{c.arf_label:>3}  {c.size:>4}  {e:>8}  {_bits(c.representative.basis_values)}")
    lines.append(f"formulas: {'PASS' if passed else 'FAIL'}")
    text = _render(_report("orbits", {"r": r}, results), args.format, lines)
    return (0 if passed else 1), text


def _verdict_dict(v: SplitVerdict) -> dict:
    return {
        "modulus": v.modulus,
        "splits": v.splits,
        "base": list(v.base.basis_values),
        "witness": None if v.witness is None else list(v.witness.coords),
        "fixed_refinement": None if v.fixed_refinement is None else list(v.fixed_refinement.basis_values),
        "candidates_checked": v.candidates_checked,
        "section": "A -> (x.A - x, A) for x any lift of witness" if v.splits else None,
    }


def _verdict_line(flavor: str, v: SplitVerdict) -> str:
    witness = _bits(v.witness.coords) if v.witness is not None else "-"
    return (f"{flavor:<9} {v.modulus:>7}  {'yes' if v.splits else 'no':<6} "
            f"{witness:<8} {v.candidates_checked:>7}")


def _cmd_split(args) -> tuple[int, str]:
    r = args.r
    if not 1 <= r <= 8:
        raise CliInputError("--r must lie in 1..8")
    if args.modulus is not None and args.modulus != 0 and args.modulus % 4:
        raise CliInputError("--modulus must be 0 or divisible by 4")
    verdict = splitting_theorem_verdict(args.p, r, homotopy_modulus=args.modulus)
    agree = verdict.smooth.splits == verdict.homotopy.splits
    results = {
        "p": args.p,
        "r": r,
        "smooth": _verdict_dict(verdict.smooth),
        "homotopy": _verdict_dict(verdict.homotopy),
        "verdicts_agree": agree,
    }
    lines = [f"split  p={args.p}  r={r}  version={__version__}",
             "flavor    modulus  splits  witness  checked",
             _verdict_line("smooth", verdict.smooth),
             _verdict_line("homotopy", verdict.homotopy)]
    if verdict.smooth.splits:
        lines.append("section: A -> (x.A - x, A) for x any lift of the witness")
    else:
        lines.append(f"certificate: {verdict.smooth.candidates_checked} translates searched, none group-fixed")
    lines.append(f"verdicts agree: {'yes' if agree else 'no'}")
    params = {"p": args.p, "r": r, "modulus": args.modulus}
    return 0, _render(_report("split", params, results), args.format, lines)


def _load_document(path: str) -> Any:
    try:
        payload = Path(path).read_text()
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(payload)
    except json.JSONDecodeError as exc:
        raise CliInputError(f"{path}: invalid JSON ({exc})") from exc


def _membership_failures(psi: QuadraticRefinement, named_elements) -> list[str]:
    return [name for name, el in named_elements if not gamma_psi_member(el, psi)]


def _cmd_mul(args) -> tuple[int, str]:
    g = element_from_document(_load_document(args.lhs))
    h = element_from_document(_load_document(args.rhs))
    if g.rank != h.rank or g.modulus != h.modulus:
        raise CliInputError("operands must share rank and modulus")
    out = jmul(g, h)
    if args.psi is not None:
        psi = _parse_psi(args.psi, g.rank)
        bad = _membership_failures(psi, (("lhs", g), ("rhs", h), ("product", out)))
        if bad:
            print(f"membership violation at base {args.psi}: {', '.join(bad)}", file=sys.stderr)
            return 1, ""
    return 0, json.dumps(element_to_document(out), sort_keys=True) + "\n"


def _cmd_inv(args) -> tuple[int, str]:
    g = element_from_document(_load_document(args.lhs))
    out = jinv(g)
    if args.psi is not None:
        psi = _parse_psi(args.psi, g.rank)
        bad = _membership_failures(psi, (("lhs", g), ("inverse", out)))
        if bad:
            print(f"membership violation at base {args.psi}: {', '.join(bad)}", file=sys.stderr)
            return 1, ""
    return 0, json.dumps(element_to_document(out), sort_keys=True) + "\n"


def _cmd_verify(args) -> tuple[int, str]:
    if not 1 <= args.r <= VERIFY_RANK_LIMIT:
        raise CliInputError(f"--r must lie in 1..{VERIFY_RANK_LIMIT}")
    if args.samples < 1:
        raise CliInputError("--samples must be positive")
    suites = run_suites(args.r, args.samples, args.seed, negative_control=args.negative_control)
    all_ok = all(s.ok for s in suites)
    results = {
        "r": args.r,
        "samples": args.samples,
        "suites": [{"name": s.name, "passed": s.passed, "total": s.total, "ok": s.ok}
                   for s in suites],
        "all_ok": all_ok,
    }
    params = {"r": args.r, "samples": args.samples, "seed": args.seed,
              "negative_control": bool(args.negative_control)}
    lines = [f"verify  r={args.r}  samples={args.samples}  seed={args.seed}  version={__version__}",
             "suite             passed  total  ok"]
    for s in suites:
        lines.append(f"{s.name:<16} {s.passed:>7} {s.total:>6}  {'yes' if s.ok else 'NO'}")
    lines.append(f"all suites: {'PASS' if all_ok else 'FAIL'}")
    text = _render(_report("verify", params, results, seed=args.seed), args.format, lines)
    return (0 if all_ok else 1), text


def _cmd_coeff(args) -> tuple[int, str]:
    if args.jmax < 1:
        raise CliInputError("--jmax must be at least 1")
    rows = []
    for j in range(1, args.jmax + 1):
        a, c, f = pontryagin_parts(j)
        rows.append({"j": j, "a": a, "c": c, "odd_factorial": _encode_int(f),
                     "coefficient": _encode_int(a * c * f)})
    results = {"jmax": args.jmax, "rows": rows}
    lines = [f"coeff  jmax={args.jmax}  version={__version__}",
             "j    a  c  (2j-1)!          coefficient"]
    for row in rows:
        lines.append(f"{row['j']:<4} {row['a']}  {row['c']}  {row['odd_factorial']!s:<16} {row['coefficient']}")
    return 0, _render(_report("coeff", {"jmax": args.jmax}, results), args.format, lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symsplit",
        description="Exact symplectic-group, refinement-orbit and extension-splitting reports.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    orbits = sub.add_parser("orbits", help="decompose quadratic refinements into orbits")
    orbits.add_argument("--r", type=int, required=True, help="rank, 1..8")
    orbits.add_argument("--format", choices=("table", "json"), default="table")

    split = sub.add_parser("split", help="decide the extension splitting question")
    split.add_argument("--p", type=int, choices=(3, 7), required=True, help="middle dimension")
    split.add_argument("--r", type=int, required=True, help="rank, 1..8")
    split.add_argument("--modulus", type=int, default=None,
                       help="override the homotopy-model modulus (0 or divisible by 4)")
    split.add_argument("--format", choices=("table", "json"), default="table")

    mul = sub.add_parser("mul", help="multiply two serialized group elements")
    mul.add_argument("--lhs", required=True, help="path to the left element document")
    mul.add_argument("--rhs", required=True, help="path to the right element document")
    mul.add_argument("--psi", default=None, help="base refinement bits for membership validation")

    inv = sub.add_parser("inv", help="invert a serialized group element")
    inv.add_argument("--lhs", required=True, help="path to the element document")
    inv.add_argument("--psi", default=None, help="base refinement bits for membership validation")

    verify = sub.add_parser("verify", help="run the seeded property suites")
    verify.add_argument("--r", type=int, required=True, help=f"rank, 1..{VERIFY_RANK_LIMIT}")
    verify.add_argument("--samples", type=int, required=True)
    verify.add_argument("--seed", type=int, required=True)
    verify.add_argument("--negative-control", action="store_true",
                        help="inject a law-violating tabulated cocycle (expected failure)")
    verify.add_argument("--format", choices=("table", "json"), default="table")

    coeff = sub.add_parser("coeff", help="tabulate the twist coefficients a_j c_j (2j-1)!")
    coeff.add_argument("--jmax", type=int, required=True)
    coeff.add_argument("--format", choices=("table", "json"), default="table")

    return parser


_HANDLERS = {
    "orbits": _cmd_orbits,
    "split": _cmd_split,
    "mul": _cmd_mul,
    "inv": _cmd_inv,
    "verify": _cmd_verify,
    "coeff": _cmd_coeff,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        code, text = _HANDLERS[args.command](args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if text:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Text and JSON encodings. Rationals are always lowest-terms strings."""

from __future__ import annotations

import json
from fractions import Fraction

from .combinatorics import format_rational, parse_rational
from .hurwitz import PowerSeries
from .hypergroup import CoproductExpansion
from .rkhs import MembershipReport, RkhsElement
from .transforms import FiniteSupportSeq, Prefix


class FormatError(ValueError):
    pass


def _load(obj):
    if isinstance(obj, (str, bytes)):
        try:
            return json.loads(obj)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
    return obj


def _rationals(items, what: str) -> list[Fraction]:
    if not isinstance(items, list):
        raise FormatError(f"{what} must be a list of rational strings")
    out = []
    for item in items:
        if isinstance(item, bool) or not isinstance(item, (str, int)):
            raise FormatError(f"{what}: {item!r} is not a rational string")
        try:
            out.append(parse_rational(str(item)))
        except ValueError as exc:
            raise FormatError(f"{what}: {exc}") from None
    return out


def dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def sequence_to_dict(seq) -> dict:
    if isinstance(seq, FiniteSupportSeq):
        finite = True
    elif isinstance(seq, Prefix):
        finite = False
    else:
        raise TypeError("expected a Prefix or FiniteSupportSeq")
    return {
        "offset": 0,
        "values": [format_rational(v) for v in seq.values],
        "finite_support": finite,
    }


def sequence_from_json(obj) -> Prefix | FiniteSupportSeq:
    data = _load(obj)
    if not isinstance(data, dict):
        raise FormatError("sequence JSON must be an object")
    if data.get("offset", 0) != 0:
        raise FormatError("only offset 0 is supported")
    finite = data.get("finite_support", False)
    if not isinstance(finite, bool):
        raise FormatError("finite_support must be true or false")
    values = _rationals(data.get("values"), "values")
    if finite:
        return FiniteSupportSeq(values)
    if not values:
        raise FormatError("a prefix needs at least one value")
    return Prefix(values)


def element_to_dict(g: RkhsElement) -> dict:
    return {"lambda": format_rational(g.lam), "coeffs": [format_rational(a) for a in g.coeffs]}


def element_from_json(obj) -> RkhsElement:
    data = _load(obj)
    if not isinstance(data, dict) or "coeffs" not in data:
        raise FormatError("element JSON needs a 'coeffs' list")
    lam = _rationals([data.get("lambda", "1")], "lambda")[0]
    return RkhsElement(_rationals(data["coeffs"], "coeffs"), lam)


def series_from_json(obj) -> PowerSeries:
    data = _load(obj)
    if not isinstance(data, dict):
        raise FormatError("power series JSON must be an object")
    coeffs = _rationals(data.get("coeffs"), "coeffs")
    if data.get("degree") != len(coeffs) - 1:
        raise FormatError("degree must equal len(coeffs) - 1")
    return PowerSeries(coeffs)


def membership_to_dict(report: MembershipReport) -> dict:
    return {
        "prefix_used": report.prefix_used,
        "inv_prefix": [format_rational(v) for v in report.inv_prefix],
        "partial_l2_sums": [format_rational(v) for v in report.partial_l2_sums],
        "bound_ratios": [format_rational(v) for v in report.bound_ratios],
        "necessary_bound_ok": report.necessary_bound_ok,
        "verdict": report.verdict,
    }


def coproduct_to_dict(expansion: CoproductExpansion, agree: bool | None = None) -> dict:
    out = {
        "m": expansion.m,
        "n": expansion.n,
        "coeffs": {str(k): format_rational(c) for k, c in sorted(expansion.coeffs.items())},
    }
    if agree is not None:
        out["formula_matches_oracle"] = agree
    return out


def matrix_from_csv(text: str) -> list[list[Fraction]]:
    rows = []
    for line in text.strip().splitlines():
        try:
            rows.append([parse_rational(cell) for cell in line.split(",")])
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return rows

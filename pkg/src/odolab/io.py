"""File formats and the canonical JSON emitter.

Exact rationals cross the process boundary as reduced "p/q" strings (or
bare integers), binary64 values as JSON numbers printed with 17 significant
digits.  Documents are emitted with sorted keys (numeric-aware for digit
keys) so identical inputs always produce byte-identical output.

On input, function values may be bare scalars or [re, im] pairs; string and
integer tokens load as exact rationals, any non-integer number switches the
whole function to binary64.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .dual import DualElement, make_root
from .harmonic import BINARY64, EXACT, FourierCoeffs, LevelFunction
from .lengths import AxiomReport, LengthSpec, LengthTable
from .rational import RationalComplex, format_rational, parse_rational
from .scales import Scale


# -- canonical emission -----------------------------------------------------------

def canonical_json(doc) -> str:
    """Deterministic JSON: sorted keys, 17-significant-digit binary64."""
    out: list[str] = []
    _emit(doc, out)
    return "".join(out)


def _emit(value, out: list[str]) -> None:
    if value is None or isinstance(value, bool):
        out.append(json.dumps(value))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"cannot serialize {value}")
        text = format(value, ".17g")
        if "." not in text and "e" not in text:
            text += ".0"  # keep the token float-shaped so modes survive reload
        out.append(text)
    elif isinstance(value, Fraction):
        out.append(json.dumps(str(value)))
    elif isinstance(value, dict):
        out.append("{")
        keys = sorted((str(k) for k in value), key=_key_order)
        originals = {str(k): k for k in value}
        for i, k in enumerate(keys):
            if i:
                out.append(", ")
            out.append(json.dumps(k))
            out.append(": ")
            _emit(value[originals[k]], out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(", ")
            _emit(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def _key_order(key: str):
    return (0, int(key), "") if key.isdigit() else (1, 0, key)


# -- scales and length data ---------------------------------------------------------

def scale_from_doc(doc) -> Scale:
    if not isinstance(doc, dict) or "scale" not in doc:
        raise ValueError('expected {"scale": [...]}')
    from .scales import validate_scale
    return validate_scale(doc["scale"])


def scale_to_doc(scale: Scale) -> dict:
    return {"scale": list(scale.entries)}


def length_spec_from_doc(doc) -> LengthSpec:
    if not isinstance(doc, dict) or "scale" not in doc or "l" not in doc:
        raise ValueError('expected {"scale": [...], "l": [...]}')
    return LengthSpec(Scale(doc["scale"]),
                      tuple(parse_rational(v) for v in doc["l"]))


def length_spec_to_doc(spec: LengthSpec) -> dict:
    return {"scale": list(spec.scale.entries),
            "l": [format_rational(v) for v in spec.l]}


def length_table_from_doc(doc) -> LengthTable:
    if not isinstance(doc, list):
        raise ValueError('expected a list of {"k":..., "s":..., "value":...}')
    table = {}
    for row in doc:
        table[make_root(int(row["k"]), int(row["s"]))] = parse_rational(row["value"])
    return LengthTable(table)


def dual_to_doc(z: DualElement) -> dict:
    return {"k": z.k, "s": z.s}


def dual_from_doc(doc) -> DualElement:
    return make_root(int(doc["k"]), int(doc["s"]))


def point_to_doc(point) -> dict:
    return {"level": point.level, "residue": point.residue}


def point_from_doc(doc, scale: Scale):
    from .odometer import OdometerPoint
    return OdometerPoint(scale, int(doc["level"]), int(doc["residue"]))


# -- functions ------------------------------------------------------------------------

def function_from_doc(doc, scale: Scale) -> LevelFunction:
    if not isinstance(doc, dict) or "level" not in doc or "values" not in doc:
        raise ValueError('expected {"level": m, "values": [...]}')
    raw = doc["values"]
    exact = all(_entry_is_exact(entry) for entry in raw)
    values = [_parse_value(entry, exact) for entry in raw]
    return LevelFunction(scale, int(doc["level"]), values,
                         EXACT if exact else BINARY64)


def _entry_is_exact(entry) -> bool:
    parts = entry if isinstance(entry, (list, tuple)) else [entry]
    return all(isinstance(p, str) or (isinstance(p, int) and not isinstance(p, bool))
               for p in parts)


def _parse_value(entry, exact: bool):
    parts = list(entry) if isinstance(entry, (list, tuple)) else [entry, 0]
    if len(parts) != 2:
        raise ValueError(f"value must be a scalar or an [re, im] pair: {entry!r}")
    if exact:
        return RationalComplex(parse_rational(parts[0]), parse_rational(parts[1]))
    return complex(_as_float(parts[0]), _as_float(parts[1]))


def _as_float(token) -> float:
    if isinstance(token, str):
        return float(Fraction(token))
    return float(token)


def function_to_doc(f: LevelFunction) -> dict:
    if f.mode == EXACT:
        values = [[str(v.re), str(v.im)] for v in f.values]
    else:
        values = [[v.real, v.imag] for v in f.values]
    return {"level": f.level, "values": values}


def coeffs_from_doc(doc) -> dict[int, int]:
    if not isinstance(doc, dict) or "coeffs" not in doc:
        raise ValueError('expected {"coeffs": {...}}')
    return {int(k): int(v) for k, v in doc["coeffs"].items()}


def coeffs_to_doc(coeffs: dict[int, int]) -> dict:
    return {"coeffs": {str(k): int(v) for k, v in sorted(coeffs.items())}}


def fourier_to_doc(c: FourierCoeffs) -> dict:
    rows = [{"k": z.k, "s": z.s, "re": value.real, "im": value.imag}
            for z, value in c.items()]
    return {"level": c.level, "coeffs": rows}


def axiom_report_to_doc(report: AxiomReport) -> dict:
    witnesses = {}
    for name, data in report.witnesses.items():
        witnesses[name] = [dual_to_doc(p) if isinstance(p, DualElement)
                           else format_rational(p) for p in data]
    return {"normalization": report.normalization,
            "non_archimedean": report.non_archimedean,
            "order_class_constancy": report.order_class_constancy,
            "witnesses": witnesses}


def load_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)

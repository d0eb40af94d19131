"""JSON interchange for groupoids and algebra elements.

The document schema is strict: exactly the expected fields, string labels
unique across elements, and every referenced label declared.  Decoding never
checks the groupoid axioms — that is the validator's job — but it guarantees
the tables are total and well-shaped, so decode(encode(G)) == G.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .core import FiniteGroupoid
from .linalg import Qi
from . import algebra

SCHEMA_VERSION = "1"

_FIELDS = ("schema_version", "elements", "units", "src", "rng", "comp", "inv")


class DocumentError(ValueError):
    """A malformed groupoid document (schema violation, unknown label, ...)."""


def encode_groupoid(G: FiniteGroupoid) -> dict:
    lab = G.labels
    return {
        "schema_version": SCHEMA_VERSION,
        "elements": list(lab),
        "units": [lab[x] for x in sorted(G.units)],
        "src": {lab[g]: lab[G.src[g]] for g in G.arrows()},
        "rng": {lab[g]: lab[G.rng[g]] for g in G.arrows()},
        "comp": [[lab[a], lab[b], lab[c]] for (a, b), c in sorted(G.comp.items())],
        "inv": {lab[g]: lab[G.inv[g]] for g in G.arrows()},
    }


def _expect(cond: bool, message: str):
    if not cond:
        raise DocumentError(message)


def decode_groupoid(doc: Any) -> FiniteGroupoid:
    _expect(isinstance(doc, dict), "document must be a JSON object")
    unknown = sorted(set(doc) - set(_FIELDS))
    _expect(not unknown, f"unknown fields: {unknown}")
    missing = sorted(set(_FIELDS) - set(doc))
    _expect(not missing, f"missing fields: {missing}")
    _expect(doc["schema_version"] == SCHEMA_VERSION,
            f"unsupported schema_version {doc['schema_version']!r}")

    elements = doc["elements"]
    _expect(isinstance(elements, list) and all(isinstance(e, str) for e in elements),
            "elements must be a list of strings")
    _expect(len(set(elements)) == len(elements), "element labels must be unique")
    index = {lab: i for i, lab in enumerate(elements)}

    def look(label: Any, where: str) -> int:
        _expect(isinstance(label, str) and label in index,
                f"{where}: unknown label {label!r}")
        return index[label]

    units = doc["units"]
    _expect(isinstance(units, list), "units must be a list")
    unit_idx = [look(u, "units") for u in units]
    _expect(len(set(unit_idx)) == len(unit_idx), "duplicate units")

    def total_map(name: str) -> tuple[int, ...]:
        m = doc[name]
        _expect(isinstance(m, dict), f"{name} must be an object")
        _expect(set(m) == set(elements), f"{name} must be defined on exactly the elements")
        return tuple(look(m[lab], name) for lab in elements)

    src = total_map("src")
    rng = total_map("rng")
    inv = total_map("inv")

    comp_entries = doc["comp"]
    _expect(isinstance(comp_entries, list), "comp must be a list of triples")
    comp: dict[tuple[int, int], int] = {}
    for entry in comp_entries:
        _expect(isinstance(entry, list) and len(entry) == 3,
                f"comp entries must be [a, b, ab] triples, got {entry!r}")
        a, b, c = (look(x, "comp") for x in entry)
        _expect((a, b) not in comp, f"duplicate comp entry for {entry[:2]!r}")
        comp[(a, b)] = c

    return FiniteGroupoid(n=len(elements), units=frozenset(unit_idx), src=src,
                          rng=rng, comp=comp, inv=inv, labels=tuple(elements))


# --- algebra elements -----------------------------------------------------

def encode_element(f: algebra.AlgebraElement) -> dict:
    """Sparse map label -> [re_num, re_den, im_num, im_den]."""
    lab = f.host.labels
    return {lab[g]: [c.re.numerator, c.re.denominator, c.im.numerator, c.im.denominator]
            for g, c in sorted(f.coeffs.items())}


def decode_element(G: FiniteGroupoid, data: Any) -> algebra.AlgebraElement:
    _expect(isinstance(data, dict), "algebra element must be an object")
    index = {lab: i for i, lab in enumerate(G.labels)}
    coeffs = {}
    for lab, quad in data.items():
        _expect(lab in index, f"unknown label {lab!r}")
        _expect(isinstance(quad, list) and len(quad) == 4
                and all(isinstance(x, int) for x in quad),
                f"coefficient for {lab!r} must be [re_num, re_den, im_num, im_den]")
        coeffs[index[lab]] = Qi(Fraction(quad[0], quad[1]), Fraction(quad[2], quad[3]))
    return algebra.from_coeffs(G, coeffs)

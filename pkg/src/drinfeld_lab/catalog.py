"""The 44 Manin triples of dimension 6, up to duality, with parameter domains.

Each entry records the Bianchi type of ``G`` and the brackets
``[X~1,X~2], [X~2,X~3], [X~3,X~1]`` of ``G~`` as a function of the
parameters.  Duals are produced on demand by :func:`catalog_triple` when a
swapped label such as ``"(5|9|b)"`` is requested.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .bianchi import bianchi_normal_form
from .exactmath import ContractViolation, to_scalar
from .liecore import LieAlgebra
from .manin import ManinTriple, dual_label, dualize

T1, T2, T3 = 0, 1, 2

DOMAIN_TEXT = {
    "a": "a > 0",
    "a6": "a > 0, a != 1",
    "b+": "b > 0",
    "b0": "b != 0",
}


def _check(kind: str, v: Fraction) -> bool:
    if kind == "a":
        return v > 0
    if kind == "a6":
        return v > 0 and v != 1
    if kind == "b+":
        return v > 0
    if kind == "b0":
        return v != 0
    raise AssertionError(kind)


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    g_type: str  # Bianchi normal form of G
    tilde: Callable[[Mapping[str, Fraction]], tuple]
    domains: Mapping[str, str]  # parameter name -> domain key

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(sorted(self.domains))


def _zero(p):
    return ({}, {}, {})


def _entry(label, g_type, tilde=_zero, **domains):
    return CatalogEntry(label, g_type, tilde, domains)


def _a(p):
    return p["a"]


def _b(p):
    return p["b"]


ENTRIES: tuple[CatalogEntry, ...] = (
    _entry("(9|1)", "9"),
    _entry("(9|5|b)", "9", lambda p: ({T2: -_b(p)}, {}, {T3: _b(p)}), b="b+"),
    _entry("(8|1)", "8"),
    _entry("(8|5.i|b)", "8", lambda p: ({T2: -_b(p)}, {}, {T3: _b(p)}), b="b+"),
    _entry("(8|5.ii|b)", "8", lambda p: ({}, {T2: _b(p)}, {T1: -_b(p)}), b="b+"),
    _entry("(8|5.iii)", "8", lambda p: ({T2: 1}, {T2: 1}, {T1: -1, T3: -1})),
    _entry("(7_a|1)", "7_a", a="a"),
    _entry("(7_a|2.i)", "7_a", lambda p: ({}, {T1: 1}, {}), a="a"),
    _entry("(7_a|2.ii)", "7_a", lambda p: ({}, {T1: -1}, {}), a="a"),
    _entry("(7_a|7_{1/a}|b)", "7_a",
           lambda p: ({T2: -_b(p) / _a(p), T3: _b(p)}, {}, {T2: _b(p), T3: _b(p) / _a(p)}),
           a="a", b="b0"),
    _entry("(7_0|1)", "7_0"),
    _entry("(7_0|2.i)", "7_0", lambda p: ({T3: 1}, {}, {})),
    _entry("(7_0|2.ii)", "7_0", lambda p: ({T3: -1}, {}, {})),
    _entry("(7_0|4|b)", "7_0", lambda p: ({T2: -_b(p), T3: _b(p)}, {}, {T3: _b(p)}), b="b0"),
    _entry("(7_0|5.i)", "7_0", lambda p: ({T2: -1}, {}, {T3: 1})),
    _entry("(7_0|5.ii|b)", "7_0", lambda p: ({}, {T2: _b(p)}, {T1: -_b(p)}), b="b+"),
    _entry("(6_a|1)", "6_a", a="a6"),
    _entry("(6_a|2)", "6_a", lambda p: ({}, {T1: 1}, {}), a="a6"),
    _entry("(6_a|6_{1/a}.i|b)", "6_a",
           lambda p: ({T2: -_b(p) / _a(p), T3: -_b(p)}, {}, {T2: _b(p), T3: _b(p) / _a(p)}),
           a="a6", b="b0"),
    _entry("(6_a|6_{1/a}.ii)", "6_a",
           lambda p: ({T1: 1}, {T2: (_a(p) + 1) / (_a(p) - 1), T3: (_a(p) + 1) / (_a(p) - 1)}, {T1: 1}),
           a="a6"),
    _entry("(6_a|6_{1/a}.iii)", "6_a",
           lambda p: ({T1: 1}, {T2: -(_a(p) - 1) / (_a(p) + 1), T3: (_a(p) - 1) / (_a(p) + 1)}, {T1: -1}),
           a="a6"),
    _entry("(6_0|1)", "6_0"),
    _entry("(6_0|2)", "6_0", lambda p: ({T3: 1}, {}, {})),
    _entry("(6_0|4.i|b)", "6_0", lambda p: ({T2: -_b(p), T3: _b(p)}, {}, {T3: _b(p)}), b="b0"),
    _entry("(6_0|4.ii)", "6_0", lambda p: ({T1: -1, T2: 1, T3: 1}, {T3: 1}, {T3: -1})),
    _entry("(6_0|5.i)", "6_0", lambda p: ({T2: -1}, {}, {T3: 1})),
    _entry("(6_0|5.ii)", "6_0", lambda p: ({T1: -1, T2: 1}, {T3: 1}, {T3: -1})),
    _entry("(6_0|5.iii|b)", "6_0", lambda p: ({}, {T2: -_b(p)}, {T1: _b(p)}), b="b+"),
    _entry("(5|1)", "5"),
    _entry("(5|2.i)", "5", lambda p: ({}, {T1: 1}, {})),
    _entry("(5|2.ii)", "5", lambda p: ({T3: 1}, {}, {})),
    _entry("(4|1)", "4"),
    _entry("(4|2.i)", "4", lambda p: ({}, {T1: 1}, {})),
    _entry("(4|2.ii)", "4", lambda p: ({}, {T1: -1}, {})),
    _entry("(4|2.iii|b)", "4", lambda p: ({}, {}, {T2: _b(p)}), b="b0"),
    _entry("(3|1)", "3"),
    _entry("(3|2)", "3", lambda p: ({}, {T1: 1}, {})),
    _entry("(3|3.i)", "3", lambda p: ({T2: -_b(p), T3: -_b(p)}, {}, {T2: _b(p), T3: _b(p)}), b="b0"),
    _entry("(3|3.ii)", "3", lambda p: ({}, {T2: 1, T3: 1}, {})),
    _entry("(3|3.iii)", "3", lambda p: ({T1: 1}, {}, {T1: -1})),
    _entry("(2|1)", "2"),
    _entry("(2|2.i)", "2", lambda p: ({T3: 1}, {}, {})),
    _entry("(2|2.ii)", "2", lambda p: ({T3: -1}, {}, {})),
    _entry("(1|1)", "1"),
)

BY_LABEL = {e.label: e for e in ENTRIES}
PRIMARY_LABELS = tuple(e.label for e in ENTRIES)
DUAL_LABELS = tuple(dual_label(lbl) for lbl in PRIMARY_LABELS)

# a = 1 is added so the 7_1 classes exist on the grid; 6_a drops it by domain
DEFAULT_GRID = {"a": (Fraction(2), Fraction(3), Fraction(1, 2), Fraction(1)),
                "b": (Fraction(1), Fraction(2), Fraction(-1))}

GRID_ENV = "DRINFELD_LAB_GRID"


def parse_params(text: str | None) -> dict[str, Fraction]:
    """``"a=2,b=-1/2"`` -> ``{"a": 2, "b": -1/2}``."""
    out: dict[str, Fraction] = {}
    if not text:
        return out
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ContractViolation(f"parameter binding needs name=value, got {part!r}")
        k, v = (s.strip() for s in part.split("=", 1))
        if not k.isidentifier():
            raise ContractViolation(f"bad parameter name {k!r}")
        val = to_scalar(v)
        if not isinstance(val, Fraction):
            raise ContractViolation(f"parameter {k} must be rational")
        out[k] = val
    return out


def parse_grid(text: str) -> dict[str, tuple[Fraction, ...]]:
    """``"a=2,3,1/2;b=1,2,-1"`` -> value tuples per parameter."""
    grid: dict[str, tuple[Fraction, ...]] = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ContractViolation(f"grid chunk needs name=values, got {chunk!r}")
        k, vals = chunk.split("=", 1)
        values = tuple(to_scalar(v.strip()) for v in vals.split(",") if v.strip())
        if not values or any(not isinstance(v, Fraction) for v in values):
            raise ContractViolation(f"grid values for {k.strip()} must be rationals")
        grid[k.strip()] = values
    return grid


def default_grid() -> dict[str, tuple[Fraction, ...]]:
    env = os.environ.get(GRID_ENV)
    grid = dict(DEFAULT_GRID)
    if env:
        grid.update(parse_grid(env))
    return grid


def _resolve(name: str) -> tuple[CatalogEntry, bool]:
    key = name.replace(" ", "")
    if key in BY_LABEL:
        return BY_LABEL[key], False
    try:
        swapped = dual_label(key)
    except ContractViolation:
        swapped = None
    if swapped in BY_LABEL:
        return BY_LABEL[swapped], True
    raise ContractViolation(f"unknown Manin triple label {name!r}")


def catalog_triple(name: str, params: Mapping | None = None) -> ManinTriple:
    """Instantiate a catalog triple (or the dual of one) at exact parameter values."""
    entry, is_dual = _resolve(name)
    raw = {k: to_scalar(v) for k, v in (params or {}).items()}
    bound: dict[str, Fraction] = {}
    for p, dom in entry.domains.items():
        if p not in raw:
            raise ContractViolation(f"{entry.label} needs parameter {p} ({DOMAIN_TEXT[dom]})")
        if not _check(dom, raw[p]):
            raise ContractViolation(f"{entry.label}: {p}={raw[p]} violates {DOMAIN_TEXT[dom]}")
        bound[p] = raw[p]
    g = bianchi_normal_form(entry.g_type, bound.get("a"))
    t12, t23, t31 = entry.tilde(bound)
    ft = LieAlgebra.from_brackets(3, {(0, 1): t12, (1, 2): t23, (2, 0): t31}, labels=("X~1", "X~2", "X~3"))
    triple = ManinTriple(entry.label, g, ft, bound)
    return dualize(triple) if is_dual else triple


def grid_points(label: str, grid: Mapping | None = None) -> list[dict[str, Fraction]]:
    """All parameter bindings of ``label`` on the grid that respect its domains."""
    entry, _ = _resolve(label)
    grid = default_grid() if grid is None else grid
    names = entry.params
    pools = []
    for p in names:
        pools.append([v for v in grid.get(p, ()) if _check(entry.domains[p], v)])
    return [dict(zip(names, combo)) for combo in itertools.product(*pools)]


def catalog_on_grid(grid: Mapping | None = None, include_duals: bool = True) -> list[ManinTriple]:
    out = []
    for label in PRIMARY_LABELS:
        for params in grid_points(label, grid):
            t = catalog_triple(label, params)
            out.append(t)
            if include_duals:
                out.append(dualize(t))
    return out

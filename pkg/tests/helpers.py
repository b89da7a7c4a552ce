"""Shared helpers for the horncone test-suite.

Golden inequality lists are written the way they are usually printed,
e.g. ``"a2+a4+b2+b4 <= c1+c4"``, and parsed here into the normal form
returned by :meth:`horncone.inequality.InequalitySpec.normal_form`.
"""

from __future__ import annotations

import re

from horncone.combinatorics import WeightPair, weights_in_range
from horncone.horn_pq import as_spectrum_pair
from horncone.inequality import normalize_row

_TERM = re.compile(r"^(\d*)([abcxyz])(\d+)$")
_LETTER_BLOCK = {"a": 0, "b": 1, "c": 2, "x": 0, "y": 1, "z": 2}


def parse_inequality(text: str, width: int) -> tuple[tuple[int, ...], str]:
    """Parse ``"a1+b1 <= c1"`` over ``3 * width`` coordinates into a normal form."""
    for symbol, sense in (("<=", "le"), (">=", "ge"), ("=", "eq")):
        if symbol in text:
            left, right = text.split(symbol)
            break
    else:
        raise ValueError(f"no relation in {text!r}")
    row = [0] * (3 * width)
    for side, sign in ((left, 1), (right, -1)):
        for term in side.replace(" ", "").split("+"):
            if term == "0":
                continue
            match = _TERM.match(term)
            if match is None:
                raise ValueError(f"bad term {term!r} in {text!r}")
            coefficient = int(match.group(1) or 1)
            index = _LETTER_BLOCK[match.group(2)] * width + int(match.group(3)) - 1
            row[index] += sign * coefficient
    return normalize_row(row, sense)


def normal_forms(specs) -> set[tuple[tuple[int, ...], str]]:
    return {spec.normal_form() for spec in specs}


def golden(lines: list[str], width: int) -> set[tuple[tuple[int, ...], str]]:
    return {parse_inequality(line, width) for line in lines}


def flat(triple) -> tuple:
    """Flat coordinates ``(A | B | C)`` of a triple of pairs."""
    return tuple(v for pair in triple for v in as_spectrum_pair(pair).values)


def pq_grid(p: int, q: int, low: int, high: int) -> list[WeightPair]:
    return [
        WeightPair(first, second)
        for first in weights_in_range(p, low, high)
        for second in weights_in_range(q, low, high)
    ]


def trace_compatible_triples(grid: list[WeightPair]):
    """Triples ``(λ, μ, ν)`` from ``grid`` with ``|ν| = |λ| + |μ|``.

    Every other triple fails both the trace equality and the weight
    bookkeeping of the semigroup oracles.
    """
    by_total: dict[int, list[WeightPair]] = {}
    for pair in grid:
        by_total.setdefault(pair.first.size + pair.second.size, []).append(pair)
    for lam in grid:
        for mu in grid:
            total = lam.first.size + lam.second.size + mu.first.size + mu.second.size
            for nu in by_total.get(total, []):
                yield lam, mu, nu

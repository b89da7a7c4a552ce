"""Inequality data model shared by the Horn(n), Horn(p, q) and S(p, q) generators.

An :class:`InequalitySpec` records where an inequality comes from (its
family, the ``(r, s)`` level and the subset triple) and derives its integer
coefficient vector over the ``3(p + q)`` coordinates ``(A, B, C)``.  The
coefficient vector is never stored independently, so serialized data is
checked against its provenance on load.

Coordinates follow the usual flat numbering: ``a_1..a_p`` are ``A'`` and
``a_{p+1}..a_{p+q}`` are ``A''`` (same for ``B`` and ``C``).
"""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .combinatorics import Partition, SubsetPair

# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

#: Inequality families of the Horn(p, q) description, in emission order.
HORN_FAMILIES: tuple[str, ...] = (
    "trace-equality",
    "first-block",
    "r-le",
    "r-ge",
    "s-ge",
    "s-le",
    "mixed-rs",
)

#: Inequality families of the S(p, q) description, in emission order.
S_FAMILIES: tuple[str, ...] = (
    "s-pq-balance",
    "s-pq-block",
    "s-pq-r-le",
    "s-pq-r-ge",
    "s-pq-s-le",
    "s-pq-s-ge",
    "s-pq-mixed",
    "s-pq-ressayre",
)

# Families whose second components enter with a minus sign.
_SIGNED_FAMILIES = frozenset({"s-pq-balance", "s-pq-mixed", "s-pq-ressayre"})

_FAMILY_RANK = {name: index for index, name in enumerate(HORN_FAMILIES + S_FAMILIES)}

VALID_SENSES = ("le", "ge", "eq")
_SENSE_SYMBOLS = {"le": "<=", "ge": ">=", "eq": "="}


def format_rational(value: Fraction | int) -> str:
    """Serialize a rational as ``"num/den"``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"num/den"``, ``"num"`` or an integer."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


# ---------------------------------------------------------------------------
# InequalitySpec
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InequalitySpec:
    """One condition of a recursive cone description.

    Attributes:
        family: Provenance tag, one of :data:`HORN_FAMILIES` or
            :data:`S_FAMILIES`.
        p: Size of the first block.
        q: Size of the second block (0 for the classical Horn(n) cone).
        r: Cardinality of the first components of ``I, J, K``.
        s: Cardinality of the second components.
        I: Index subsets for ``A``.
        J: Index subsets for ``B``.
        K: Index subsets for ``C``.
        sense: ``"le"``, ``"ge"`` or ``"eq"``; the condition reads
            ``coeffs · (A, B, C) <sense> 0``.
    """

    family: str
    p: int
    q: int
    r: int
    s: int
    I: SubsetPair  # noqa: E741
    J: SubsetPair
    K: SubsetPair
    sense: str
    coeffs: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_RANK:
            raise ValueError(f"unknown inequality family {self.family!r}")
        if self.sense not in VALID_SENSES:
            raise ValueError(f"sense must be one of {VALID_SENSES}, got {self.sense!r}")
        for name, pair in (("I", self.I), ("J", self.J), ("K", self.K)):
            if (pair.p, pair.q) != (self.p, self.q):
                raise ValueError(f"{name}={pair} does not live in [{self.p}] x [{self.q}]")
            if (pair.r, pair.s) != (self.r, self.s):
                raise ValueError(f"{name}={pair} does not have cardinalities ({self.r}, {self.s})")
        object.__setattr__(self, "coeffs", self._derive_coeffs())

    # -- coefficients ---------------------------------------------------

    def _derive_coeffs(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        width = self.p + self.q
        signed = self.family in _SIGNED_FAMILIES
        is_horn = self.family in HORN_FAMILIES

        def block(pair: SubsetPair, sign: int) -> tuple[int, ...]:
            vector = [0] * width
            for i in pair.first:
                vector[i - 1] += sign
            for i in pair.second:
                vector[self.p + i - 1] += -sign if signed else sign
            return tuple(vector)

        c_sign = -1 if is_horn else 1
        return (block(self.I, 1), block(self.J, 1), block(self.K, c_sign))

    @property
    def dimension(self) -> int:
        return 3 * (self.p + self.q)

    @property
    def is_horn(self) -> bool:
        """Whether the coordinates are those of Horn(p, q) (``a, b, c``)."""
        return self.family in HORN_FAMILIES

    def row(self) -> tuple[int, ...]:
        """The flat coefficient vector ``(A | B | C)``."""
        return self.coeffs[0] + self.coeffs[1] + self.coeffs[2]

    def normal_form(self) -> tuple[tuple[int, ...], str]:
        """Canonical ``(row, sense)``: ``ge`` turned into ``le``, content gcd 1,
        first nonzero entry of an equality positive."""
        return normalize_row(self.row(), self.sense)

    def holds(self, point: Sequence[int | Fraction]) -> bool:
        """Exactly evaluate the condition at a flat point ``(A | B | C)``."""
        if len(point) != self.dimension:
            raise ValueError(f"expected a point of dimension {self.dimension}, got {len(point)}")
        value = sum(c * x for c, x in zip(self.row(), point) if c)
        if self.sense == "le":
            return value <= 0
        if self.sense == "ge":
            return value >= 0
        return value == 0

    # -- presentation ---------------------------------------------------

    def render(self) -> str:
        """Human-readable form, e.g. ``"a1+b1 >= c2"``."""
        letters = "abc" if self.is_horn else "xyz"
        left: list[str] = []
        right: list[str] = []
        for letter, vector in zip(letters, self.coeffs):
            for index, c in enumerate(vector, start=1):
                if not c:
                    continue
                term = f"{abs(c) if abs(c) != 1 else ''}{letter}{index}"
                (left if c > 0 else right).append(term)
        return f"{'+'.join(left) or '0'} {_SENSE_SYMBOLS[self.sense]} {'+'.join(right) or '0'}"

    def sort_key(self) -> tuple[Any, ...]:
        return (_FAMILY_RANK[self.family], self.r, self.s, self.I, self.J, self.K)

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "s": self.s,
            "I": self.I.to_dict(),
            "J": self.J.to_dict(),
            "K": self.K.to_dict(),
            "sense": self.sense,
            "coeffs": {
                name: [format_rational(c) for c in vector]
                for name, vector in zip("ABC", self.coeffs)
            },
            "text": self.render(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> InequalitySpec:
        """Rebuild a spec; stored coefficients, if any, must match the provenance.

        Raises:
            ValueError: On missing keys or inconsistent coefficients.
        """
        try:
            p, q = int(data["p"]), int(data["q"])
            spec = cls(
                family=data["family"],
                p=p,
                q=q,
                r=int(data["r"]),
                s=int(data["s"]),
                I=SubsetPair.from_dict(data["I"], p, q),
                J=SubsetPair.from_dict(data["J"], p, q),
                K=SubsetPair.from_dict(data["K"], p, q),
                sense=data["sense"],
            )
        except KeyError as exc:
            raise ValueError(f"inequality record is missing {exc}") from exc
        stored = data.get("coeffs")
        if stored is not None:
            vectors = tuple(tuple(parse_rational(c) for c in stored[name]) for name in "ABC")
            if vectors != spec.coeffs:
                raise ValueError(f"stored coefficients do not match {spec.render()!r}")
        return spec

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> InequalitySpec:
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        return self.render()


def normalize_row(row: Sequence[int | Fraction], sense: str) -> tuple[tuple[int, ...], str]:
    """Normalize ``row · x <sense> 0`` to integer content 1 with ``le``/``eq`` only."""
    values = [Fraction(c) for c in row]
    scale = math.lcm(*(v.denominator for v in values)) if values else 1
    ints = [int(v * scale) for v in values]
    if sense == "ge":
        ints = [-v for v in ints]
        sense = "le"
    divisor = math.gcd(*ints) if any(ints) else 1
    ints = [v // divisor for v in ints]
    if sense == "eq":
        lead = next((v for v in ints if v), 0)
        if lead < 0:
            ints = [-v for v in ints]
    return tuple(ints), sense


# ---------------------------------------------------------------------------
# Evaluation helpers
# ---------------------------------------------------------------------------


def integer_point(values: Iterable[Fraction | int]) -> list[int]:
    """Scale rationals by their common denominator; signs of linear forms are kept."""
    fractions = [Fraction(v) for v in values]
    scale = math.lcm(*(f.denominator for f in fractions)) if fractions else 1
    return [int(f * scale) for f in fractions]


def first_violation(
    specs: Iterable[InequalitySpec], point: Sequence[Fraction | int]
) -> InequalitySpec | None:
    """Return the first spec that fails at ``point``, or ``None``."""
    scaled = integer_point(point)
    for spec in specs:
        if not spec.holds(scaled):
            return spec
    return None


@dataclass
class MembershipResult:
    """Outcome of a cone or semigroup membership test.

    Attributes:
        member: Whether the point belongs to the cone or semigroup.
        certificate: First violated inequality, for cone tests.
        witness: The partition ``a`` found by a semigroup search.
        multiplicity: Multiplicity reported by the oracle route, if computed.
        reason: Short explanation when ``member`` is false for a reason
            other than a violated inequality.
    """

    member: bool
    certificate: InequalitySpec | None = None
    witness: Partition | None = None
    multiplicity: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.member

    def to_dict(self) -> dict[str, Any]:
        return {
            "member": self.member,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "witness": None if self.witness is None else self.witness.to_list(),
            "multiplicity": self.multiplicity,
            "reason": self.reason,
        }

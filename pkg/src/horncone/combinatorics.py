"""Partitions, GL-weights, index subsets and the duality maps between them.

Every value type here is immutable and hashable, so instances can be used
as dictionary keys by the memo tables in :mod:`horncone.lr_engine`.

Conventions:

* A :class:`Partition` forgets trailing zeros: ``Partition((2, 1, 0))``
  equals ``Partition((2, 1))``.
* A :class:`GLWeight` keeps its length, which is the rank ``n`` of ``GL_n``.
* A :class:`Subset` of ``[n]`` is 1-based and carries its ambient ``n``.

All enumerations are lexicographic so that every listing is reproducible.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any

# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------


def _is_weakly_decreasing(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of nonnegative integers.

    Attributes:
        parts: The nonzero parts.  Trailing zeros passed to the constructor
            are stripped, so equality and hashing ignore padding.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if not _is_weakly_decreasing(parts):
            raise ValueError(f"Partition parts must be weakly decreasing, got {list(parts)}")
        if parts and parts[-1] < 0:
            raise ValueError(f"Partition parts must be nonnegative, got {list(parts)}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        """Number of boxes ``|λ|``."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self.parts)

    def row(self, k: int) -> int:
        """Return ``λ_k`` (1-based), zero beyond the length."""
        if k < 1:
            raise ValueError(f"row index must be >= 1, got {k}")
        return self.parts[k - 1] if k <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        """Return the parts padded with zeros to length ``n``."""
        if self.length > n:
            raise ValueError(f"{self} has more than {n} nonzero parts")
        return self.parts + (0,) * (n - self.length)

    def fits_box(self, m: int, n: int) -> bool:
        """Whether the diagram fits in an ``m`` x ``n`` rectangle (m rows)."""
        return self.length <= m and self.row(1) <= n

    def contains(self, other: Partition) -> bool:
        """Whether the diagram of ``other`` is contained in this one."""
        return other.length <= self.length and all(
            other.parts[i] <= self.parts[i] for i in range(other.length)
        )

    def to_weight(self, n: int) -> GLWeight:
        """View this partition as a polynomial ``GL_n`` weight."""
        return GLWeight(self.padded(n))

    def to_list(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"


@dataclass(frozen=True, order=True)
class GLWeight:
    """A dominant weight of ``GL_n``: a weakly decreasing integer vector.

    Negative entries are allowed; the length is significant.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if not _is_weakly_decreasing(parts):
            raise ValueError(f"GL weight must be weakly decreasing, got {list(parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def zero(cls, n: int) -> GLWeight:
        return cls((0,) * n)

    @property
    def n(self) -> int:
        """The rank this weight lives in."""
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def is_polynomial(self) -> bool:
        """Whether every entry is nonnegative."""
        return not self.parts or self.parts[-1] >= 0

    def as_partition(self) -> Partition:
        """Return the underlying partition of a nonnegative weight."""
        if not self.is_polynomial():
            raise ValueError(f"{list(self.parts)} has negative entries")
        return Partition(self.parts)

    def to_list(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"


@dataclass(frozen=True, order=True)
class Subset:
    """A subset ``I = {i_1 < ... < i_r}`` of ``[n]``.

    Attributes:
        n: The ambient size.
        elements: Strictly increasing 1-based elements.
    """

    n: int
    elements: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        elements = tuple(int(x) for x in self.elements)
        if self.n < 0:
            raise ValueError(f"ambient size must be >= 0, got {self.n}")
        if any(elements[i] >= elements[i + 1] for i in range(len(elements) - 1)):
            raise ValueError(f"subset elements must be strictly increasing, got {list(elements)}")
        if elements and (elements[0] < 1 or elements[-1] > self.n):
            raise ValueError(f"subset elements {list(elements)} are not within [1, {self.n}]")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def full(cls, n: int) -> Subset:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def empty(cls, n: int) -> Subset:
        return cls(n, ())

    @property
    def r(self) -> int:
        """Cardinality."""
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "elements": list(self.elements)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Subset:
        return cls(int(data["n"]), tuple(data["elements"]))

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"


@dataclass(frozen=True, order=True)
class SubsetPair:
    """A pair ``(I', I'')`` with ``I'`` in ``[p]`` and ``I''`` in ``[q]``."""

    first: Subset
    second: Subset

    @property
    def r(self) -> int:
        return self.first.r

    @property
    def s(self) -> int:
        return self.second.r

    @property
    def p(self) -> int:
        return self.first.n

    @property
    def q(self) -> int:
        return self.second.n

    def lambda_pair(self) -> WeightPair:
        """Return ``(λ(I'), λ(I''))`` as weights of ranks ``r`` and ``s``."""
        return WeightPair(
            lambda_of_subset(self.first).to_weight(self.r),
            lambda_of_subset(self.second).to_weight(self.s),
        )

    def to_dict(self) -> dict[str, list[int]]:
        return {"Ip": list(self.first.elements), "Is": list(self.second.elements)}

    @classmethod
    def from_dict(cls, data: dict[str, Any], p: int, q: int) -> SubsetPair:
        return cls(Subset(p, tuple(data["Ip"])), Subset(q, tuple(data["Is"])))

    def __str__(self) -> str:
        return f"({self.first}|{self.second})"


@dataclass(frozen=True, order=True)
class WeightPair:
    """A pair ``(λ', λ'')`` of ``GL_p`` and ``GL_q`` weights."""

    first: GLWeight
    second: GLWeight

    @classmethod
    def of(cls, first: Iterable[int], second: Iterable[int]) -> WeightPair:
        return cls(
            GLWeight(as_entries(first, "weight")), GLWeight(as_entries(second, "weight"))
        )

    @property
    def p(self) -> int:
        return self.first.n

    @property
    def q(self) -> int:
        return self.second.n

    def to_list(self) -> list[list[int]]:
        return [self.first.to_list(), self.second.to_list()]

    def __str__(self) -> str:
        return f"({self.first}|{self.second})"


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def enumerate_subsets(n: int, r: int) -> list[Subset]:
    """All ``r``-element subsets of ``[n]`` in lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if r < 0 or r > n:
        raise ValueError(f"r must lie in [0, {n}], got {r}")
    return [Subset(n, c) for c in itertools.combinations(range(1, n + 1), r)]


def enumerate_subset_pairs(p: int, q: int, r: int, s: int) -> list[SubsetPair]:
    """All ``(I', I'')`` in ``P^p_r x P^q_s``, lexicographic in ``(I', I'')``."""
    return [
        SubsetPair(first, second)
        for first in enumerate_subsets(p, r)
        for second in enumerate_subsets(q, s)
    ]


def _bounded_partitions(
    max_len: int, max_part: int, total: int | None
) -> Iterator[tuple[int, ...]]:
    """Padded partitions (length ``max_len``) in ascending lexicographic order."""

    def build(
        prefix: tuple[int, ...], remaining_len: int, cap: int, left: int | None
    ) -> Iterator[tuple[int, ...]]:
        if remaining_len == 0:
            if left is None or left == 0:
                yield prefix
            return
        for part in range(0, cap + 1):
            if left is not None:
                if part > left or part * remaining_len < left:
                    continue
            yield from build(
                prefix + (part,),
                remaining_len - 1,
                part,
                None if left is None else left - part,
            )

    if max_len == 0:
        if total in (None, 0):
            yield ()
        return
    yield from build((), max_len, max_part, total)


def partitions_in_box(m: int, n: int) -> list[Partition]:
    """All partitions fitting an ``m`` x ``n`` box, ascending lexicographically.

    The empty partition comes first and the full box ``(n^m)`` last.
    """
    if m < 0 or n < 0:
        raise ValueError(f"box dimensions must be >= 0, got {m}x{n}")
    return [Partition(p) for p in _bounded_partitions(m, n, None)]


def partitions_of(k: int, max_len: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of ``k`` with at most ``max_len`` parts, each at most ``max_part``."""
    if k < 0:
        return []
    cap = k if max_part is None else min(k, max_part)
    return [Partition(p) for p in _bounded_partitions(max_len, cap, k)]


def weights_in_range(n: int, low: int, high: int) -> list[GLWeight]:
    """All ``GL_n`` weights with entries in ``[low, high]``, ascending lexicographically."""
    if high < low:
        return []
    return [
        GLWeight(tuple(x + low for x in p)) for p in _bounded_partitions(n, high - low, None)
    ]


# ---------------------------------------------------------------------------
# Subset <-> partition dictionary
# ---------------------------------------------------------------------------


def lambda_of_subset(subset: Subset) -> Partition:
    """Return ``λ(I)`` with ``λ_a = n - r + a - i_a``; it fits the ``r x (n-r)`` box."""
    n, r = subset.n, subset.r
    return Partition(tuple(n - r + a - i for a, i in enumerate(subset.elements, start=1)))


def subset_of_lambda(lam: Partition, m: int, n: int) -> Subset:
    """Inverse of :func:`lambda_of_subset` for ``λ`` in the ``m x n`` box.

    Returns the ``m``-subset of ``[m + n]`` with ``i_a = n + a - λ_a``.

    Raises:
        ValueError: If ``λ`` does not fit the box.
    """
    if not lam.fits_box(m, n):
        raise ValueError(f"{lam} does not fit in a {m}x{n} box")
    return Subset(m + n, tuple(n + a - lam.row(a) for a in range(1, m + 1)))


def complement_subset(subset: Subset) -> Subset:
    """The set complement ``I^c`` within ``[n]``."""
    members = set(subset.elements)
    return Subset(subset.n, tuple(i for i in range(1, subset.n + 1) if i not in members))


def tilde_subset(subset: Subset) -> Subset:
    """The reflection ``Ĩ = {n + 1 - i}``."""
    return Subset(subset.n, tuple(sorted(subset.n + 1 - i for i in subset.elements)))


def vee_subset(subset: Subset) -> Subset:
    """``I∨ = (I^c)~``."""
    return tilde_subset(complement_subset(subset))


# ---------------------------------------------------------------------------
# Partition and weight maps
# ---------------------------------------------------------------------------


def box_complement(lam: Partition, m: int, n: int) -> Partition:
    """``λ̂_k = n - λ_{m+1-k}`` inside the ``m x n`` box."""
    if not lam.fits_box(m, n):
        raise ValueError(f"{lam} does not fit in a {m}x{n} box")
    return Partition(tuple(n - lam.row(m + 1 - k) for k in range(1, m + 1)))


def poincare_dual(lam: Partition, m: int, n: int) -> Partition:
    """The partition ``λ'`` with ``σ_λ σ_λ' = [pt]`` in ``H*(G(m, n))``."""
    return box_complement(lam, m, n)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: ``λ∨_j = #{k : λ_k >= j}``."""
    if not lam.parts:
        return Partition()
    return Partition(
        tuple(sum(1 for part in lam.parts if part >= j) for j in range(1, lam.parts[0] + 1))
    )


def tilde_partition(lam: Partition, m_prime: int, m: int) -> Partition:
    """``λ̃ = (λ̂)∨`` for ``λ`` in the ``m' x m`` box; the result fits ``m x m'``."""
    return conjugate(box_complement(lam, m_prime, m))


def dual_weight(weight: GLWeight) -> GLWeight:
    """``λ* = (-λ_n, ..., -λ_1)``, the highest weight of the dual representation."""
    return GLWeight(tuple(-x for x in reversed(weight.parts)))


def shift_weight(weight: GLWeight, k: int) -> GLWeight:
    """``λ + k·1_n``, i.e. a twist by ``det^k``."""
    return GLWeight(tuple(x + k for x in weight.parts))


def dual_pair(pair: WeightPair) -> WeightPair:
    return WeightPair(dual_weight(pair.first), dual_weight(pair.second))


def shift_pair(pair: WeightPair, k: int) -> WeightPair:
    """Shift both components by ``k``, i.e. ``λ + k·1_{p+q}``."""
    return WeightPair(shift_weight(pair.first, k), shift_weight(pair.second, k))


def as_entries(value: Any, what: str = "value") -> tuple[Any, ...]:
    """Return ``value`` as a tuple, rejecting scalars and strings.

    Raises:
        ValueError: If ``value`` is not a list-like collection of entries.
    """
    if isinstance(value, (str, bytes)) or not isinstance(value, Iterable):
        raise ValueError(f"{what} must be a list of entries, got {value!r}")
    return tuple(value)


def as_partition(value: Partition | GLWeight | Sequence[int]) -> Partition:
    """Coerce a partition-like value."""
    if isinstance(value, Partition):
        return value
    if isinstance(value, GLWeight):
        return value.as_partition()
    return Partition(as_entries(value, "partition"))


def as_weight(value: GLWeight | Partition | Sequence[int], n: int | None = None) -> GLWeight:
    """Coerce a weight-like value, padding partitions to length ``n`` when given."""
    if isinstance(value, GLWeight):
        weight = value
    elif isinstance(value, Partition):
        if n is None:
            raise ValueError("a rank is required to view a partition as a GL weight")
        weight = value.to_weight(n)
    else:
        weight = GLWeight(as_entries(value, "weight"))
    if n is not None and weight.n != n:
        raise ValueError(f"expected a weight of length {n}, got {weight.to_list()}")
    return weight

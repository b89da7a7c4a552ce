"""The classical Horn cone Horn(n).

``(A, B, C)`` belongs to Horn(n) iff ``|A| + |B| = |C|`` and
``|A|_I + |B|_J <= |C|_K`` for every ``r`` in ``[n-1]`` and every index
triple whose partitions ``(λ(I), λ(J), λ(K))`` lie in Horn(r).  Those index
triples are decided by the Littlewood-Richardson oracle (saturation) and
tabulated in :class:`HornTripleTable`, optionally persisted by a
:class:`~horncone.cache.TripleCache`.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from .combinatorics import (
    GLWeight,
    Subset,
    SubsetPair,
    as_entries,
    as_weight,
    enumerate_subsets,
    lambda_of_subset,
)
from .inequality import InequalitySpec, MembershipResult, first_violation, parse_rational
from .lr_engine import gl_multiplicity, register_memo

if TYPE_CHECKING:
    from .cache import TripleCache

logger = logging.getLogger(__name__)

_TABLE_MEMO = register_memo("horn_triple_table")
_INEQUALITY_MEMO = register_memo("horn_n_inequalities")
_RECURSIVE_GATE_MEMO = register_memo("horn_n_recursive_gate")

# ---------------------------------------------------------------------------
# Spectra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    """A weakly decreasing vector of exact rationals (a point of the chamber ``C_n``)."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(parse_rational(v) for v in self.values)
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            shown = [str(v) for v in values]
            raise ValueError(f"spectrum must be weakly decreasing, got {shown}")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, values: Sequence[Any]) -> Spectrum:
        return cls(as_entries(values, "spectrum"))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def total(self) -> Fraction:
        """``|A|``."""
        return sum(self.values, Fraction(0))

    def partial(self, subset: Subset) -> Fraction:
        """``|A|_I = Σ_{i ∈ I} a_i``."""
        if subset.n != self.n:
            raise ValueError(f"subset of [{subset.n}] used on a spectrum of length {self.n}")
        return sum((self.values[i - 1] for i in subset), Fraction(0))

    def dual(self) -> Spectrum:
        """``A* = (-a_n, ..., -a_1)``."""
        return Spectrum(tuple(-v for v in reversed(self.values)))

    def scaled(self, factor: Fraction | int) -> Spectrum:
        return Spectrum(tuple(v * factor for v in self.values))

    def to_list(self) -> list[str]:
        return [f"{v.numerator}/{v.denominator}" for v in self.values]


def as_spectrum(value: Spectrum | Sequence[Any]) -> Spectrum:
    return value if isinstance(value, Spectrum) else Spectrum.of(value)


# ---------------------------------------------------------------------------
# Semigroup oracle
# ---------------------------------------------------------------------------


def horn_n_semigroup(
    lam: GLWeight | Sequence[int],
    mu: GLWeight | Sequence[int],
    nu: GLWeight | Sequence[int],
    n: int,
) -> bool:
    """``(λ, μ, ν) ∈ Horn^Z(n)``, i.e. ``V_ν ⊂ V_λ ⊗ V_μ``."""
    return gl_multiplicity(nu, lam, mu, n) >= 1


# ---------------------------------------------------------------------------
# Horn triple tables
# ---------------------------------------------------------------------------


Triple = tuple[Subset, Subset, Subset]


@dataclass
class HornTripleTable:
    """The index triples ``(I, J, K) ∈ (P^n_r)^3`` with ``(λ(I), λ(J), λ(K)) ∈ Horn(r)``."""

    n: int
    r: int
    triples: tuple[Triple, ...] = ()
    _index: frozenset[Triple] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.triples = tuple(self.triples)
        self._index = frozenset(self.triples)

    def __contains__(self, triple: object) -> bool:
        return triple in self._index

    def __len__(self) -> int:
        return len(self.triples)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "r": self.r,
            "triples": [[list(i.elements), list(j.elements), list(k.elements)]
                        for i, j, k in self.triples],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> HornTripleTable:
        n, r = int(data["n"]), int(data["r"])
        triples = [
            (Subset(n, tuple(i)), Subset(n, tuple(j)), Subset(n, tuple(k)))
            for i, j, k in data["triples"]
        ]
        for triple in triples:
            if any(subset.r != r for subset in triple):
                raise ValueError(f"triple {triple} does not consist of {r}-subsets of [{n}]")
        return cls(n, r, tuple(triples))


def _triples_for(
    first: Subset, subsets: Sequence[Subset], r: int, *, recursive: bool
) -> list[Triple]:
    lam = lambda_of_subset(first).to_weight(r)
    found: list[Triple] = []
    for second in subsets:
        mu = lambda_of_subset(second).to_weight(r)
        for third in subsets:
            nu = lambda_of_subset(third).to_weight(r)
            if nu.size != lam.size + mu.size:
                continue
            if horn_r_gate(lam, mu, nu, r, recursive=recursive):
                found.append((first, second, third))
    return found


def horn_triple_table(
    n: int,
    r: int,
    *,
    cache: TripleCache | None = None,
    jobs: int = 1,
    recursive: bool = False,
) -> HornTripleTable:
    """Tabulate the Horn(r) index triples of Horn(n).

    Args:
        n: Ambient size.
        r: Subset cardinality, ``1 <= r <= n - 1``.
        cache: Optional on-disk cache consulted before computing.
        jobs: Worker threads; the result order does not depend on it.
        recursive: Decide Horn(r) membership by recursive cone descent
            instead of the LR oracle.

    Raises:
        ValueError: If ``r`` is out of range.
    """
    if not 1 <= r <= n - 1:
        raise ValueError(f"r must lie in [1, {n - 1}] for n={n}, got {r}")
    if cache is not None and not recursive:
        cached = cache.load(n, r)
        if cached is not None:
            return cached

    def compute() -> HornTripleTable:
        subsets = enumerate_subsets(n, r)
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                chunks = list(
                    pool.map(lambda s: _triples_for(s, subsets, r, recursive=recursive), subsets)
                )
        else:
            chunks = [_triples_for(s, subsets, r, recursive=recursive) for s in subsets]
        triples = [t for chunk in chunks for t in chunk]
        logger.debug("horn_triple_table(%d, %d): %d triples", n, r, len(triples))
        return HornTripleTable(n, r, tuple(triples))

    table: HornTripleTable = _TABLE_MEMO.get_or_compute((n, r, recursive), compute)
    if cache is not None and not recursive and not os.path.isfile(cache.path_for(n, r)):
        cache.store(table)
    return table


# ---------------------------------------------------------------------------
# Inequalities and cone membership
# ---------------------------------------------------------------------------


def horn_r_gate(
    lam: GLWeight, mu: GLWeight, nu: GLWeight, r: int, *, recursive: bool = False
) -> bool:
    """Whether the integer triple ``(λ, μ, ν)`` lies in Horn(r).

    By default the LR oracle decides; with ``recursive`` the triple is fed
    back into :func:`horn_n_cone` as rational spectra.
    """
    if not recursive:
        return horn_n_semigroup(lam, mu, nu, r)
    key = (lam, mu, nu, r)
    return bool(
        _RECURSIVE_GATE_MEMO.get_or_compute(
            key,
            lambda: horn_n_cone(lam.parts, mu.parts, nu.parts, r, recursive=True).member,
        )
    )


def _classical_pair(subset: Subset) -> SubsetPair:
    return SubsetPair(subset, Subset.empty(0))


def horn_n_inequalities(
    n: int,
    *,
    recursive: bool = False,
    cache: TripleCache | None = None,
    jobs: int = 1,
) -> list[InequalitySpec]:
    """The trace equality followed by every Horn(n) inequality, level by level."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    def compute() -> list[InequalitySpec]:
        full = _classical_pair(Subset.full(n))
        specs = [InequalitySpec("trace-equality", n, 0, n, 0, full, full, full, "eq")]
        for r in range(1, n):
            table = horn_triple_table(n, r, cache=cache, jobs=jobs, recursive=recursive)
            for i, j, k in table.triples:
                specs.append(
                    InequalitySpec(
                        "r-le", n, 0, r, 0,
                        _classical_pair(i), _classical_pair(j), _classical_pair(k),
                        "le",
                    )
                )
        return specs

    specs: list[InequalitySpec] = _INEQUALITY_MEMO.get_or_compute((n, recursive), compute)
    return specs


def horn_n_cone(
    A: Spectrum | Sequence[Any],  # noqa: N803
    B: Spectrum | Sequence[Any],  # noqa: N803
    C: Spectrum | Sequence[Any],  # noqa: N803
    n: int | None = None,
    *,
    recursive: bool = False,
) -> MembershipResult:
    """Decide ``(A, B, C) ∈ Horn(n)``.

    Args:
        A: Spectrum of the first summand.
        B: Spectrum of the second summand.
        C: Spectrum of the sum.
        n: Expected length; inferred from ``A`` when omitted.
        recursive: Decide the index triples by recursive descent.

    Returns:
        A :class:`MembershipResult` whose certificate is the first violated
        inequality in enumeration order.

    Raises:
        ValueError: On length mismatch.
    """
    a, b, c = as_spectrum(A), as_spectrum(B), as_spectrum(C)
    size = a.n if n is None else n
    if not (a.n == b.n == c.n == size):
        raise ValueError(f"spectra must all have length {size}, got {a.n}, {b.n}, {c.n}")
    point = a.values + b.values + c.values
    violated = first_violation(horn_n_inequalities(size, recursive=recursive), point)
    return MembershipResult(member=violated is None, certificate=violated)


def horn_n_multiplicity(
    lam: GLWeight | Sequence[int], mu: GLWeight | Sequence[int], nu: GLWeight | Sequence[int]
) -> int:
    """``[V_ν : V_λ ⊗ V_μ]`` with the rank read off ``λ``."""
    n = as_weight(lam).n
    return gl_multiplicity(nu, lam, mu, n)

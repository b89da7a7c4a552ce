"""Schubert calculus on Grassmannians and the cohomological facet condition.

``H*(G(m, n))`` has the Schubert basis ``σ_λ`` indexed by partitions in the
``m x n`` box; products are Schur products truncated to the box (the ring
morphism ``φ_{m,n}``).  A :class:`TensorClass` lives in the tensor product
of two such rings, which is all the facet analysis of ``S(p, q)`` needs.

The main entry point is :func:`cohomological_condition`, which decides
whether a Ressayre datum ``(r, s, I, J, K)`` yields an inequality of
``S(p, q)``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any, Union

from .combinatorics import (
    Partition,
    SubsetPair,
    as_partition,
    box_complement,
    complement_subset,
    conjugate,
    enumerate_subset_pairs,
    lambda_of_subset,
    partitions_in_box,
    tilde_partition,
)
from .lr_engine import Decomposition, invariant_dim, lr_product

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Rings and classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrassmannianRing:
    """The cohomology ring ``H*(G(m, n), Z)``, ``G(m, n)`` = m-planes in ``C^{m+n}``."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError(f"Grassmannian dimensions must be >= 0, got G({self.m},{self.n})")

    @property
    def dimension(self) -> int:
        """Complex dimension ``mn``; the degree of ``[pt]``."""
        return self.m * self.n

    def contains(self, lam: Partition) -> bool:
        return lam.fits_box(self.m, self.n)

    def basis(self) -> list[Partition]:
        return partitions_in_box(self.m, self.n)

    def point_partition(self) -> Partition:
        return Partition((self.n,) * self.m)

    def sigma(self, lam: Partition | Sequence[int], coefficient: int = 1) -> CohomologyClass:
        """The class ``coefficient · σ_λ``."""
        return CohomologyClass(self, {as_partition(lam): coefficient})

    def unit(self) -> CohomologyClass:
        return self.sigma(Partition())

    def point_class(self) -> CohomologyClass:
        return self.sigma(self.point_partition())

    def zero(self) -> CohomologyClass:
        return CohomologyClass(self, {})

    def __str__(self) -> str:
        return f"G({self.m},{self.n})"


def _key(lam: Partition) -> str:
    return "[" + ",".join(str(x) for x in lam.parts) + "]"


@dataclass
class CohomologyClass:
    """An integer combination of Schubert classes in one Grassmannian ring."""

    ring: GrassmannianRing
    coeffs: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: dict[Partition, int] = {}
        for lam, value in self.coeffs.items():
            lam = as_partition(lam)
            if not self.ring.contains(lam):
                raise ValueError(f"{lam} does not index a Schubert class of {self.ring}")
            if value:
                cleaned[lam] = cleaned.get(lam, 0) + value
        self.coeffs = {lam: v for lam, v in sorted(cleaned.items()) if v}

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set[int]:
        return {lam.size for lam in self.coeffs}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __add__(self, other: CohomologyClass) -> CohomologyClass:
        if self.ring != other.ring:
            raise ValueError(f"cannot add classes of {self.ring} and {other.ring}")
        merged = dict(self.coeffs)
        for lam, value in other.coeffs.items():
            merged[lam] = merged.get(lam, 0) + value
        return CohomologyClass(self.ring, merged)

    def __rmul__(self, scalar: int) -> CohomologyClass:
        return CohomologyClass(self.ring, {lam: scalar * v for lam, v in self.coeffs.items()})

    def __mul__(self, other: CohomologyClass) -> CohomologyClass:
        return cup_product(self, other)

    def to_dict(self) -> dict[str, Any]:
        return {
            "ring": [self.ring.m, self.ring.n],
            "coeffs": {_key(lam): v for lam, v in self.coeffs.items()},
        }


@dataclass
class TensorClass:
    """A class in ``H*(G(m, n)) ⊗ H*(G(m', n'))``, keyed by pairs of partitions."""

    rings: tuple[GrassmannianRing, GrassmannianRing]
    coeffs: dict[tuple[Partition, Partition], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        left, right = self.rings
        cleaned: dict[tuple[Partition, Partition], int] = {}
        for (lam, mu), value in self.coeffs.items():
            if not left.contains(lam) or not right.contains(mu):
                raise ValueError(f"({lam}, {mu}) does not index a class of {left} x {right}")
            if value:
                cleaned[(lam, mu)] = cleaned.get((lam, mu), 0) + value
        self.coeffs = {key: v for key, v in sorted(cleaned.items()) if v}

    @classmethod
    def pure(cls, first: CohomologyClass, second: CohomologyClass) -> TensorClass:
        """The class ``first ⊗ second``."""
        return cls(
            (first.ring, second.ring),
            {
                (lam, mu): a * b
                for lam, a in first.coeffs.items()
                for mu, b in second.coeffs.items()
            },
        )

    @classmethod
    def unit(cls, rings: tuple[GrassmannianRing, GrassmannianRing]) -> TensorClass:
        return cls(rings, {(Partition(), Partition()): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set[tuple[int, int]]:
        return {(lam.size, mu.size) for lam, mu in self.coeffs}

    def __add__(self, other: TensorClass) -> TensorClass:
        if self.rings != other.rings:
            raise ValueError("cannot add classes of different tensor rings")
        merged = dict(self.coeffs)
        for key, value in other.coeffs.items():
            merged[key] = merged.get(key, 0) + value
        return TensorClass(self.rings, merged)

    def __mul__(self, other: TensorClass) -> TensorClass:
        return cup_product(self, other)

    def to_dict(self) -> dict[str, Any]:
        left, right = self.rings
        return {
            "ring": [[left.m, left.n], [right.m, right.n]],
            "coeffs": {f"{_key(lam)}|{_key(mu)}": v for (lam, mu), v in self.coeffs.items()},
        }


AnyClass = Union[CohomologyClass, TensorClass]


# ---------------------------------------------------------------------------
# Ring operations
# ---------------------------------------------------------------------------


def _truncated_product(
    ring: GrassmannianRing, lam: Partition, mu: Partition
) -> dict[Partition, int]:
    return {
        nu: c for nu, c in lr_product(lam, mu, max_length=ring.m).items() if nu.row(1) <= ring.n
    }


def cup_product(a: AnyClass, b: AnyClass) -> AnyClass:
    """Cup product of two classes in the same ring.

    Raises:
        ValueError: If the rings differ.
    """
    if isinstance(a, CohomologyClass) and isinstance(b, CohomologyClass):
        if a.ring != b.ring:
            raise ValueError(f"cannot multiply classes of {a.ring} and {b.ring}")
        result: dict[Partition, int] = {}
        for lam, x in a.coeffs.items():
            for mu, y in b.coeffs.items():
                for nu, c in _truncated_product(a.ring, lam, mu).items():
                    result[nu] = result.get(nu, 0) + x * y * c
        return CohomologyClass(a.ring, result)
    if isinstance(a, TensorClass) and isinstance(b, TensorClass):
        if a.rings != b.rings:
            raise ValueError("cannot multiply classes of different tensor rings")
        left, right = a.rings
        pairs: dict[tuple[Partition, Partition], int] = {}
        for (l1, r1), x in a.coeffs.items():
            for (l2, r2), y in b.coeffs.items():
                left_terms = _truncated_product(left, l1, l2)
                if not left_terms:
                    continue
                right_terms = _truncated_product(right, r1, r2)
                for nu, c in left_terms.items():
                    for rho, d in right_terms.items():
                        pairs[(nu, rho)] = pairs.get((nu, rho), 0) + x * y * c * d
        return TensorClass(a.rings, pairs)
    raise ValueError("cannot multiply a single-ring class with a tensor class")


def product(classes: Iterable[AnyClass]) -> AnyClass:
    """Multiply a nonempty sequence of classes from left to right."""
    iterator = iter(classes)
    try:
        result = next(iterator)
    except StopIteration:
        raise ValueError("product of an empty sequence of classes") from None
    for item in iterator:
        result = cup_product(result, item)
    return result


def power(x: CohomologyClass, k: int) -> CohomologyClass:
    """``x^k`` for ``k >= 0``."""
    result = x.ring.unit()
    for _ in range(k):
        result = cup_product(result, x)  # type: ignore[assignment]
    return result


def phi(
    representation: Decomposition | Partition | Sequence[int],
    ring: GrassmannianRing,
) -> CohomologyClass:
    """The ring morphism ``s_λ ↦ σ_λ`` if ``λ_1 <= n``, else ``0``.

    Args:
        representation: A single partition or a polynomial ``GL_m``
            decomposition; keys with more than ``m`` rows also map to 0.
        ring: The target ``H*(G(m, n))``.
    """
    if isinstance(representation, Decomposition):
        items = [(w.as_partition(), mult) for w, mult in representation]
    else:
        items = [(as_partition(representation), 1)]
    coeffs = {lam: mult for lam, mult in items if ring.contains(lam)}
    return CohomologyClass(ring, coeffs)


def delta_pullback(x: AnyClass) -> AnyClass:
    """The isomorphism ``H*(G(m, n)) -> H*(G(n, m))``, ``σ_λ ↦ σ_{λ∨}``.

    Applied componentwise on tensor classes.
    """
    if isinstance(x, CohomologyClass):
        ring = GrassmannianRing(x.ring.n, x.ring.m)
        return CohomologyClass(ring, {conjugate(lam): v for lam, v in x.coeffs.items()})
    left, right = x.rings
    rings = (GrassmannianRing(left.n, left.m), GrassmannianRing(right.n, right.m))
    return TensorClass(
        rings, {(conjugate(lam), conjugate(mu)): v for (lam, mu), v in x.coeffs.items()}
    )


def is_point_multiple(x: AnyClass) -> int | None:
    """Return ``k >= 1`` if ``x = k[pt]``, otherwise ``None``."""
    if isinstance(x, CohomologyClass):
        point: Any = x.ring.point_partition()
    else:
        point = (x.rings[0].point_partition(), x.rings[1].point_partition())
    if len(x.coeffs) != 1 or point not in x.coeffs:
        return None
    k = x.coeffs[point]
    return k if k >= 1 else None


# ---------------------------------------------------------------------------
# Chern classes
# ---------------------------------------------------------------------------


def chern_tautological(ring: GrassmannianRing, k: int) -> CohomologyClass:
    """``c_k(E) = σ_{1^k}`` for the tautological bundle (rank ``m``)."""
    if k < 0 or k > ring.m or (k > 0 and ring.n == 0):
        return ring.zero()
    return ring.sigma((1,) * k)


def chern_quotient(ring: GrassmannianRing, k: int) -> CohomologyClass:
    """``c_k(E⊥) = σ_k`` for the orthogonal complement bundle (rank ``n``)."""
    if k < 0 or k > ring.n or (k > 0 and ring.m == 0):
        return ring.zero()
    return ring.sigma((k,))


def total_chern(ring: GrassmannianRing, *, quotient: bool = False) -> CohomologyClass:
    """The total Chern class of ``E`` (or ``E⊥`` when ``quotient`` is set)."""
    rank = ring.n if quotient else ring.m
    chern = chern_quotient if quotient else chern_tautological
    total = ring.zero()
    for k in range(rank + 1):
        total = total + chern(ring, k)
    return total


# ---------------------------------------------------------------------------
# Euler classes
# ---------------------------------------------------------------------------


def euler_product_bundle(m: int, n: int, m_prime: int, n_prime: int) -> TensorClass:
    """``Eul(E_{m,n} ⊠ E_{m',n'}) = Σ_{λ ⊂ m' x m} σ_λ̃ ⊗ σ_λ``.

    Terms whose factors leave their boxes are dropped.
    """
    if min(m, n, m_prime, n_prime) < 1:
        raise ValueError("euler_product_bundle needs all dimensions >= 1")
    left, right = GrassmannianRing(m, n), GrassmannianRing(m_prime, n_prime)
    coeffs: dict[tuple[Partition, Partition], int] = {}
    for lam in partitions_in_box(m_prime, m):
        tilde = tilde_partition(lam, m_prime, m)
        if left.contains(tilde) and right.contains(lam):
            coeffs[(tilde, lam)] = 1
    return TensorClass((left, right), coeffs)


def vrs_rings(p: int, q: int, r: int, s: int) -> tuple[GrassmannianRing, GrassmannianRing]:
    """The rings ``H*(G(r, p-r))`` and ``H*(G(q-s, s))`` carrying ``Eul(V^r_s)``."""
    return GrassmannianRing(r, p - r), GrassmannianRing(q - s, s)


def _check_pq(p: int, q: int) -> None:
    if not p >= q >= 1:
        raise ValueError(f"expected p >= q >= 1, got p={p}, q={q}")


def euler_class_vrs(p: int, q: int, r: int, s: int) -> TensorClass:
    """``Eul(V^r_s) = Σ_{λ ⊂ s x (p-r), λ_1 <= q-s} σ_λ̂ ⊗ σ_{λ∨}``, zero if ``s > r``.

    Raises:
        ValueError: Unless ``0 < r < p`` and ``0 < s < q``.
    """
    _check_pq(p, q)
    if not (0 < r < p and 0 < s < q):
        raise ValueError(f"(r, s) = ({r}, {s}) is not interior for (p, q) = ({p}, {q})")
    rings = vrs_rings(p, q, r, s)
    if s > r:
        return TensorClass(rings, {})
    coeffs = {
        (box_complement(lam, s, p - r), conjugate(lam)): 1
        for lam in partitions_in_box(s, p - r)
        if lam.row(1) <= q - s
    }
    return TensorClass(rings, coeffs)


def euler_boundary(p: int, q: int, r: int, s: int) -> TensorClass:
    """``Eul(V^r_s)`` when ``r ∈ {0, p}`` or ``s ∈ {0, q}``.

    The bundle is zero (class 1) when ``s = 0`` or ``r = p``.  When ``s = q``
    it is ``(E⊥_{r,p-r})^q`` with class ``(σ_{p-r})^q``; when ``r = 0`` it is
    ``(E⊥_{q-s,s})^p`` with class ``(σ_s)^p``.  The flag case ``(0, q)`` is a
    nonzero bundle on a point, so its class vanishes.
    """
    _check_pq(p, q)
    if not (0 <= r <= p and 0 <= s <= q) or (r, s) in ((0, 0), (p, q)):
        raise ValueError(f"(r, s) = ({r}, {s}) is not a boundary index for ({p}, {q})")
    if 0 < r < p and 0 < s < q:
        raise ValueError(f"(r, s) = ({r}, {s}) is interior; use euler_class_vrs")
    rings = vrs_rings(p, q, r, s)
    left, right = rings
    if (r, s) == (0, q):
        return TensorClass(rings, {})
    if s == 0 or r == p:
        return TensorClass.unit(rings)
    if s == q:
        return TensorClass.pure(power(left.sigma((p - r,)), q), right.unit())
    return TensorClass.pure(left.unit(), power(right.sigma((s,)), p))


def euler_class(p: int, q: int, r: int, s: int) -> TensorClass:
    """``Eul(V^r_s)`` for every admissible ``(r, s)``."""
    if 0 < r < p and 0 < s < q:
        return euler_class_vrs(p, q, r, s)
    return euler_boundary(p, q, r, s)


# ---------------------------------------------------------------------------
# Cohomological condition
# ---------------------------------------------------------------------------


def _check_datum(p: int, q: int, r: int, s: int, pairs: Sequence[SubsetPair]) -> None:
    _check_pq(p, q)
    if not (0 <= r <= p and 0 <= s <= q) or (r, s) in ((0, 0), (p, q)):
        raise ValueError(f"(r, s) = ({r}, {s}) is out of range for ({p}, {q})")
    for pair in pairs:
        if (pair.p, pair.q, pair.r, pair.s) != (p, q, r, s):
            raise ValueError(
                f"subset pair {pair} does not lie in P^{p}_{r} x P^{q}_{s}"
            )


def _schubert_factor(
    pair: SubsetPair, rings: tuple[GrassmannianRing, GrassmannianRing]
) -> TensorClass:
    """``σ_{λ(I')} ⊗ σ_{λ((I'')^c)}``."""
    return TensorClass(
        rings,
        {(lambda_of_subset(pair.first), lambda_of_subset(complement_subset(pair.second))): 1},
    )


def cohomological_condition(
    p: int, q: int, r: int, s: int, I: SubsetPair, J: SubsetPair, K: SubsetPair  # noqa: E741, N803
) -> bool:
    """Whether the product of the three Schubert factors and ``Eul(V^r_s)``
    is a nonzero multiple of ``[pt]`` in ``H*(G(r, p-r)) ⊗ H*(G(q-s, s))``.

    Raises:
        ValueError: If ``(r, s)`` or the subsets are out of range.
    """
    _check_datum(p, q, r, s, (I, J, K))
    rings = vrs_rings(p, q, r, s)
    factors = [_schubert_factor(pair, rings) for pair in (I, J, K)]
    euler = euler_class(p, q, r, s)
    if euler.is_zero():
        return False
    left_degree = sum(lam.size for f in factors for lam, _ in f.coeffs)
    right_degree = sum(mu.size for f in factors for _, mu in f.coeffs)
    target = (rings[0].dimension - left_degree, rings[1].dimension - right_degree)
    if target not in euler.degrees():
        return False
    result = product([*factors, euler])
    return is_point_multiple(result) is not None


def witness_mu_exists(
    p: int, q: int, r: int, s: int, I: SubsetPair, J: SubsetPair, K: SubsetPair  # noqa: E741, N803
) -> Partition | None:
    """Least ``μ ⊂ s x (p-r)`` with both invariant conditions nonzero.

    The conditions are ``[V_{λ(I')} ⊗ V_{λ(J')} ⊗ V_{λ(K')} ⊗ V_μ ⊗
    det^{-(p-r)}]^{GL_r} ≠ 0`` and ``[V_{λ(I'')} ⊗ V_{λ(J'')} ⊗ V_{λ(K'')}
    ⊗ V_μ ⊗ det^{-(p-r)-2(q-s)}]^{GL_s} ≠ 0``.

    Raises:
        ValueError: Unless ``0 < s <= r < p`` and ``s < q``.
    """
    _check_pq(p, q)
    if not (0 < r < p and 0 < s < q and s <= r):
        raise ValueError(f"(r, s) = ({r}, {s}) needs 0 < s <= r < p and s < q")
    _check_datum(p, q, r, s, (I, J, K))
    firsts = [pair.lambda_pair().first for pair in (I, J, K)]
    seconds = [pair.lambda_pair().second for pair in (I, J, K)]
    first_size = sum(w.size for w in firsts)
    second_size = sum(w.size for w in seconds)
    for mu in partitions_in_box(s, p - r):
        if first_size + mu.size != r * (p - r):
            continue
        if second_size + mu.size != s * (p - r) + 2 * s * (q - s):
            continue
        if not invariant_dim([*firsts, mu.to_weight(r)], -(p - r), r):
            continue
        if invariant_dim([*seconds, mu.to_weight(s)], -(p - r) - 2 * (q - s), s):
            return mu
    return None


@dataclass(frozen=True)
class RessayreDatum:
    """An index ``(r, s, I, J, K)`` satisfying the cohomological condition."""

    r: int
    s: int
    I: SubsetPair  # noqa: E741
    J: SubsetPair
    K: SubsetPair


def ressayre_data(p: int, q: int) -> list[RessayreDatum]:
    """All ``(r, s, I, J, K)`` with the cohomological condition, in lexicographic order."""
    _check_pq(p, q)
    data: list[RessayreDatum] = []
    for r in range(p + 1):
        for s in range(q + 1):
            if (r, s) in ((0, 0), (p, q)):
                continue
            pairs = enumerate_subset_pairs(p, q, r, s)
            for i_pair in pairs:
                for j_pair in pairs:
                    for k_pair in pairs:
                        if cohomological_condition(p, q, r, s, i_pair, j_pair, k_pair):
                            data.append(RessayreDatum(r, s, i_pair, j_pair, k_pair))
    logger.debug("ressayre_data(%d, %d): %d data", p, q, len(data))
    return data


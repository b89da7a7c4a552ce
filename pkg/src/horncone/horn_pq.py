"""Horn(p, q), S(p, q) and Q(p, q): semigroup oracles, Θ and recursive descriptions.

Points of these cones are triples of :class:`SpectrumPair` (``A = (A', A'')``
with ``A'`` of length ``p`` and ``A''`` of length ``q``); integer points are
triples of :class:`~horncone.combinatorics.WeightPair`.  Three routes decide
membership and are required to agree:

* the semigroup oracles (:func:`horn_pq_semigroup`, :func:`s_pq_semigroup`),
  which search for a partition ``a`` indexing a summand of
  ``Sym(C^p ⊗ C^q)``;
* :func:`generate_inequalities`, the recursive description of Horn(p, q)
  whose index triples are gated by Horn(r) and Horn(r, s) tests;
* :func:`generate_s_inequalities` and :func:`ressayre_inequalities`, the
  two descriptions of S(p, q), moved to Horn(p, q) by :func:`theta`.

``p >= q >= 1`` is required throughout.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, TypeVar, Union

from .combinatorics import (
    GLWeight,
    Partition,
    Subset,
    SubsetPair,
    WeightPair,
    as_entries,
    dual_pair,
    dual_weight,
    enumerate_subset_pairs,
    enumerate_subsets,
    lambda_of_subset,
    partitions_of,
    shift_pair,
    shift_weight,
    tilde_subset,
)
from .horn_classical import Spectrum, as_spectrum, horn_n_cone, horn_n_semigroup
from .inequality import InequalitySpec, MembershipResult, first_violation
from .lr_engine import invariant_dim, register_memo
from .polyhedra import LinearSystem, irredundant_indices
from .schubert import cohomological_condition, witness_mu_exists

logger = logging.getLogger(__name__)

_HORN_MEMO = register_memo("horn_pq_inequalities")
_S_MEMO = register_memo("s_pq_inequalities")
_RESSAYRE_MEMO = register_memo("ressayre_inequalities")

GATES = ("oracle", "recursive")

T = TypeVar("T")

# ---------------------------------------------------------------------------
# Spectrum pairs and Θ
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumPair:
    """A point ``(A', A'')`` of ``C_p x C_q``."""

    first: Spectrum
    second: Spectrum

    @classmethod
    def of(cls, first: Sequence[Any], second: Sequence[Any]) -> SpectrumPair:
        return cls(as_spectrum(first), as_spectrum(second))

    @property
    def p(self) -> int:
        return self.first.n

    @property
    def q(self) -> int:
        return self.second.n

    @property
    def total(self) -> Fraction:
        """``|A| = |A'| + |A''|``."""
        return self.first.total + self.second.total

    @property
    def values(self) -> tuple[Fraction, ...]:
        """Flat coordinates ``(a_1, ..., a_{p+q})``."""
        return self.first.values + self.second.values

    def partial(self, subsets: SubsetPair) -> Fraction:
        """``|A|_I = |A'|_{I'} + |A''|_{I''}``."""
        return self.first.partial(subsets.first) + self.second.partial(subsets.second)

    def to_list(self) -> list[list[str]]:
        return [self.first.to_list(), self.second.to_list()]


PairLike = Union[SpectrumPair, WeightPair]
PairTriple = tuple[PairLike, PairLike, PairLike]


def _two_blocks(value: Any, what: str) -> tuple[Any, Any]:
    blocks = as_entries(value, what)
    if len(blocks) != 2:
        raise ValueError(f"a {what} needs two blocks, got {value!r}")
    return blocks[0], blocks[1]


def as_spectrum_pair(value: SpectrumPair | WeightPair | Sequence[Sequence[Any]]) -> SpectrumPair:
    if isinstance(value, SpectrumPair):
        return value
    if isinstance(value, WeightPair):
        return SpectrumPair.of(value.first.parts, value.second.parts)
    first, second = _two_blocks(value, "spectrum pair")
    return SpectrumPair.of(first, second)


def as_weight_pair(value: WeightPair | Sequence[Sequence[int]]) -> WeightPair:
    if isinstance(value, WeightPair):
        return value
    first, second = _two_blocks(value, "weight pair")
    return WeightPair.of(first, second)


def _dual_second(pair: PairLike) -> PairLike:
    if isinstance(pair, WeightPair):
        return WeightPair(pair.first, dual_weight(pair.second))
    return SpectrumPair(pair.first, pair.second.dual())


def _dual_first(pair: PairLike) -> PairLike:
    if isinstance(pair, WeightPair):
        return WeightPair(dual_weight(pair.first), pair.second)
    return SpectrumPair(pair.first.dual(), pair.second)


def theta(triple: Sequence[PairLike]) -> PairTriple:
    """``Θ(λ, μ, ν) = ((λ', λ''*), (μ', μ''*), (ν'*, ν''))``.

    Θ is an involution and is linear, so it applies to weight pairs and to
    rational spectrum pairs alike.
    """
    lam, mu, nu = triple
    return (_dual_second(lam), _dual_second(mu), _dual_first(nu))


def _check_pq(p: int, q: int) -> None:
    if not p >= q >= 1:
        raise ValueError(f"expected p >= q >= 1, got p={p}, q={q}")


def _check_weights(pairs: Sequence[WeightPair], p: int, q: int) -> None:
    for pair in pairs:
        if (pair.p, pair.q) != (p, q):
            raise ValueError(f"weight pair {pair} does not have shape ({p}, {q})")


# ---------------------------------------------------------------------------
# Semigroup oracles
# ---------------------------------------------------------------------------


def _horn_witnesses(
    lam: WeightPair, mu: WeightPair, nu: WeightPair, p: int, q: int
) -> Iterator[tuple[Partition, int, int]]:
    """Yield ``(a, first_dim, second_dim)`` for every partition ``a`` of the forced size."""
    size = nu.first.size - lam.first.size - mu.first.size
    if size != lam.second.size + mu.second.size - nu.second.size or size < 0:
        return
    first = [lam.first, mu.first, dual_weight(nu.first)]
    second = [lam.second, mu.second, dual_weight(nu.second)]
    for a in partitions_of(size, min(p, q)):
        left = invariant_dim([*first, a.to_weight(p)], 0, p)
        if not left:
            continue
        right = invariant_dim([*second, dual_weight(a.to_weight(q))], 0, q)
        if right:
            yield a, left, right


def horn_pq_semigroup(
    lam: WeightPair | Sequence[Sequence[int]],
    mu: WeightPair | Sequence[Sequence[int]],
    nu: WeightPair | Sequence[Sequence[int]],
    p: int,
    q: int,
) -> Partition | None:
    """Least witness ``a`` for ``(λ, μ, ν) ∈ Horn^Z(p, q)``, or ``None``.

    ``a`` runs over partitions with at most ``min(p, q)`` rows and
    ``|a| = |ν'| - |λ'| - |μ'| = |λ''| + |μ''| - |ν''|``, in ascending
    lexicographic order, and must satisfy
    ``[V_λ' ⊗ V_μ' ⊗ V_ν'* ⊗ V_a]^{GL_p} ≠ 0`` and
    ``[V_λ'' ⊗ V_μ'' ⊗ V_ν''* ⊗ V_a*]^{GL_q} ≠ 0``.

    Raises:
        ValueError: If ``p < q`` or a weight has the wrong shape.
    """
    _check_pq(p, q)
    pairs = [as_weight_pair(x) for x in (lam, mu, nu)]
    _check_weights(pairs, p, q)
    for a, _, _ in _horn_witnesses(*pairs, p, q):
        return a
    return None


def horn_pq_multiplicity(
    lam: WeightPair | Sequence[Sequence[int]],
    mu: WeightPair | Sequence[Sequence[int]],
    nu: WeightPair | Sequence[Sequence[int]],
    p: int,
    q: int,
) -> int:
    """Multiplicity of ``V_ν`` in ``V_λ ⊗ V_μ ⊗ Sym(C^p ⊗ C^q)``."""
    _check_pq(p, q)
    pairs = [as_weight_pair(x) for x in (lam, mu, nu)]
    _check_weights(pairs, p, q)
    return sum(left * right for _, left, right in _horn_witnesses(*pairs, p, q))


def s_pq_semigroup(
    lam: WeightPair | Sequence[Sequence[int]],
    mu: WeightPair | Sequence[Sequence[int]],
    nu: WeightPair | Sequence[Sequence[int]],
    p: int,
    q: int,
) -> Partition | None:
    """Least witness ``a`` for ``(λ, μ, ν) ∈ S^Z(p, q)``, or ``None``.

    Here ``|a| = -(|λ'| + |μ'| + |ν'|) = -(|λ''| + |μ''| + |ν''|)`` and both
    ``[V_λ' ⊗ V_μ' ⊗ V_ν' ⊗ V_a]^{GL_p}`` and
    ``[V_λ'' ⊗ V_μ'' ⊗ V_ν'' ⊗ V_a]^{GL_q}`` must be nonzero.
    """
    _check_pq(p, q)
    pairs = [as_weight_pair(x) for x in (lam, mu, nu)]
    _check_weights(pairs, p, q)
    size = -sum(pair.first.size for pair in pairs)
    if size != -sum(pair.second.size for pair in pairs) or size < 0:
        return None
    firsts = [pair.first for pair in pairs]
    seconds = [pair.second for pair in pairs]
    for a in partitions_of(size, min(p, q)):
        if not invariant_dim([*firsts, a.to_weight(p)], 0, p):
            continue
        if invariant_dim([*seconds, a.to_weight(q)], 0, q):
            return a
    return None


def q_pq_semigroup(
    lam: WeightPair | Sequence[Sequence[int]],
    mu: WeightPair | Sequence[Sequence[int]],
    nu: WeightPair | Sequence[Sequence[int]],
    p: int,
    q: int,
) -> bool:
    """``(λ, μ, ν) ∈ Q^Z(p, q)``: ``λ <= 0``, ``μ <= 0`` and ``(λ, μ, ν*) ∈ Horn^Z(p, q)``."""
    _check_pq(p, q)
    pairs = [as_weight_pair(x) for x in (lam, mu, nu)]
    _check_weights(pairs, p, q)
    for pair in pairs[:2]:
        if any(x > 0 for x in pair.first.parts + pair.second.parts):
            return False
    return horn_pq_semigroup(pairs[0], pairs[1], dual_pair(pairs[2]), p, q) is not None


def q_shift(
    lam: WeightPair | Sequence[Sequence[int]],
    mu: WeightPair | Sequence[Sequence[int]],
    nu: WeightPair | Sequence[Sequence[int]],
    k: int,
) -> tuple[WeightPair, WeightPair, WeightPair]:
    """``(λ - k·1, μ - k·1, ν* + 2k·1)``."""
    pairs = [as_weight_pair(x) for x in (lam, mu, nu)]
    return (
        shift_pair(pairs[0], -k),
        shift_pair(pairs[1], -k),
        shift_pair(dual_pair(pairs[2]), 2 * k),
    )


def minimal_q_shift(
    lam: WeightPair | Sequence[Sequence[int]],
    mu: WeightPair | Sequence[Sequence[int]],
    nu: WeightPair | Sequence[Sequence[int]],
    p: int,
    q: int,
    k_max: int = 16,
) -> int | None:
    """Least ``k`` in ``[0, k_max]`` with :func:`q_shift` landing in ``Q^Z(p, q)``."""
    for k in range(k_max + 1):
        if q_pq_semigroup(*q_shift(lam, mu, nu, k), p, q):
            return k
    return None


# ---------------------------------------------------------------------------
# Horn(p, q) inequalities
# ---------------------------------------------------------------------------


def _gated(candidates: Sequence[T], gate: Callable[[T], bool], jobs: int) -> list[T]:
    """Keep the candidates passing ``gate``; order does not depend on ``jobs``."""
    if jobs > 1 and len(candidates) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(gate, candidates))
    else:
        verdicts = [gate(c) for c in candidates]
    return [c for c, keep in zip(candidates, verdicts) if keep]


def _triples(pairs: Sequence[SubsetPair]) -> list[tuple[SubsetPair, SubsetPair, SubsetPair]]:
    return [(i, j, k) for i in pairs for j in pairs for k in pairs]


def _horn_r(lam: GLWeight, mu: GLWeight, nu: GLWeight, r: int, gate: str) -> bool:
    if nu.size != lam.size + mu.size:
        return False
    if gate == "recursive":
        return horn_n_cone(lam.parts, mu.parts, nu.parts, r, recursive=True).member
    return horn_n_semigroup(lam, mu, nu, r)


def _horn_rs(lam: WeightPair, mu: WeightPair, nu: WeightPair, r: int, s: int, gate: str) -> bool:
    if gate == "recursive":
        return horn_pq_cone(lam, mu, nu, r, s, gate="recursive").member
    return horn_pq_semigroup(lam, mu, nu, r, s) is not None


def _check_gate(gate: str) -> None:
    if gate not in GATES:
        raise ValueError(f"gate must be one of {GATES}, got {gate!r}")


def generate_inequalities(
    p: int, q: int, *, gate: str = "oracle", jobs: int = 1, filtered: bool = False
) -> list[InequalitySpec]:
    """The recursive description of Horn(p, q).

    Families are emitted in this order: the trace equality
    ``|A| + |B| = |C|``; the block inequality ``|A'| + |B'| <= |C'|``; for
    each ``r`` in ``[p-1]`` the ``r-le`` family (``(λ(I'), λ(J'), λ(K')) ∈
    Horn(r)``) and the ``r-ge`` family (``λ(K') + (p+q-r)``); for each ``s``
    in ``[q-1]`` the ``s-ge`` family (``λ(K'') + (q-s)``) and the ``s-le``
    family (``λ(K'') - p``); finally for ``1 <= s <= r`` the ``mixed-rs``
    family, gated by ``(λ(I), λ(J), λ(K) + (0, (r-p)·1_s)) ∈ Horn(r, s)``.
    Within a family index triples are in lexicographic order.

    Args:
        p: Size of the first block.
        q: Size of the second block, ``1 <= q <= p``.
        gate: ``"oracle"`` decides index triples with the semigroup
            oracles, ``"recursive"`` with the cone descriptions of the
            smaller cones.
        jobs: Worker threads for gate evaluation.
        filtered: Drop inequalities implied by the rest (exact LP).

    Raises:
        ValueError: If ``p < q``, ``q < 1`` or ``gate`` is unknown.
    """
    _check_pq(p, q)
    _check_gate(gate)
    specs: list[InequalitySpec] = _HORN_MEMO.get_or_compute(
        (p, q, gate), lambda: _generate_horn(p, q, gate, jobs)
    )
    return filter_inequalities(specs) if filtered else list(specs)


def _generate_horn(p: int, q: int, gate: str, jobs: int) -> list[InequalitySpec]:
    full = SubsetPair(Subset.full(p), Subset.full(q))
    block = SubsetPair(Subset.full(p), Subset.empty(q))
    specs = [
        InequalitySpec("trace-equality", p, q, p, q, full, full, full, "eq"),
        InequalitySpec("first-block", p, q, p, 0, block, block, block, "le"),
    ]

    for r in range(1, p):
        pairs = [SubsetPair(sub, Subset.empty(q)) for sub in enumerate_subsets(p, r)]
        triples = _triples(pairs)

        def r_le(t: tuple[SubsetPair, SubsetPair, SubsetPair], r: int = r) -> bool:
            i, j, k = (lambda_of_subset(x.first).to_weight(r) for x in t)
            return _horn_r(i, j, k, r, gate)

        def r_ge(t: tuple[SubsetPair, SubsetPair, SubsetPair], r: int = r) -> bool:
            i, j, k = (lambda_of_subset(x.first).to_weight(r) for x in t)
            return _horn_r(i, j, shift_weight(k, q + p - r), r, gate)

        specs += [InequalitySpec("r-le", p, q, r, 0, *t, "le") for t in _gated(triples, r_le, jobs)]
        specs += [InequalitySpec("r-ge", p, q, r, 0, *t, "ge") for t in _gated(triples, r_ge, jobs)]

    for s in range(1, q):
        pairs = [SubsetPair(Subset.empty(p), sub) for sub in enumerate_subsets(q, s)]
        triples = _triples(pairs)

        def s_ge(t: tuple[SubsetPair, SubsetPair, SubsetPair], s: int = s) -> bool:
            i, j, k = (lambda_of_subset(x.second).to_weight(s) for x in t)
            return _horn_r(i, j, shift_weight(k, q - s), s, gate)

        def s_le(t: tuple[SubsetPair, SubsetPair, SubsetPair], s: int = s) -> bool:
            i, j, k = (lambda_of_subset(x.second).to_weight(s) for x in t)
            return _horn_r(i, j, shift_weight(k, -p), s, gate)

        specs += [InequalitySpec("s-ge", p, q, 0, s, *t, "ge") for t in _gated(triples, s_ge, jobs)]
        specs += [InequalitySpec("s-le", p, q, 0, s, *t, "le") for t in _gated(triples, s_le, jobs)]

    for r in range(1, p):
        for s in range(1, min(r, q - 1) + 1):
            triples = _triples(enumerate_subset_pairs(p, q, r, s))

            def mixed(
                t: tuple[SubsetPair, SubsetPair, SubsetPair], r: int = r, s: int = s
            ) -> bool:
                i, j, k = (x.lambda_pair() for x in t)
                k = WeightPair(k.first, shift_weight(k.second, r - p))
                return _horn_rs(i, j, k, r, s, gate)

            specs += [
                InequalitySpec("mixed-rs", p, q, r, s, *t, "le")
                for t in _gated(triples, mixed, jobs)
            ]

    logger.debug("generate_inequalities(%d, %d, gate=%s): %d specs", p, q, gate, len(specs))
    return specs


def filter_inequalities(
    specs: Sequence[InequalitySpec], context: LinearSystem | None = None
) -> list[InequalitySpec]:
    """Drop the specs implied by the others (equalities are always kept)."""
    if not specs:
        return []
    system = LinearSystem.from_inequalities(specs)
    extra = list(context) if context is not None else None
    return [specs[i] for i in irredundant_indices(system, extra)]


# ---------------------------------------------------------------------------
# S(p, q) inequalities
# ---------------------------------------------------------------------------


def _lambdas(subsets: Sequence[Subset]) -> list[GLWeight]:
    return [lambda_of_subset(x).to_weight(x.r) for x in subsets]


def _tilde_lambdas(subsets: Sequence[Subset]) -> list[GLWeight]:
    return _lambdas([tilde_subset(x) for x in subsets])


def generate_s_inequalities(p: int, q: int, *, jobs: int = 1) -> list[InequalitySpec]:
    """The description of S(p, q), family by family.

    In coordinates ``(X, Y, Z)``: the balance ``|X'| + |Y'| + |Z'| = |X''| +
    |Y''| + |Z''|``; the block ``|X'| + |Y'| + |Z'| <= 0``; for ``r`` in
    ``[p-1]`` the inequalities ``|X'|_{I'} + |Y'|_{J'} + |Z'|_{K'} <= 0``
    when ``[V_λ(I') ⊗ V_λ(J') ⊗ V_λ(K') ⊗ det^{r-p}]^{GL_r} ≠ 0`` and
    ``>= 0`` when the reflected subsets satisfy the same with
    ``det^{q-p+r}``; the same pattern on the second block with ``det^{s-q}``
    and ``det^{p-q+s}``; and the mixed inequalities
    ``|X'|_{I'} + |Y'|_{J'} + |Z'|_{K'} <= |X''|_{I''} + |Y''|_{J''} +
    |Z''|_{K''}`` for ``1 <= s <= r``, gated by :func:`witness_mu_exists`.
    """
    _check_pq(p, q)
    return list(_S_MEMO.get_or_compute((p, q), lambda: _generate_s(p, q, jobs)))


def _generate_s(p: int, q: int, jobs: int) -> list[InequalitySpec]:
    full = SubsetPair(Subset.full(p), Subset.full(q))
    block = SubsetPair(Subset.full(p), Subset.empty(q))
    specs = [
        InequalitySpec("s-pq-balance", p, q, p, q, full, full, full, "eq"),
        InequalitySpec("s-pq-block", p, q, p, 0, block, block, block, "le"),
    ]

    for r in range(1, p):
        pairs = [SubsetPair(sub, Subset.empty(q)) for sub in enumerate_subsets(p, r)]
        triples = _triples(pairs)

        def r_le(t: tuple[SubsetPair, SubsetPair, SubsetPair], r: int = r) -> bool:
            return bool(invariant_dim(_lambdas([x.first for x in t]), r - p, r))

        def r_ge(t: tuple[SubsetPair, SubsetPair, SubsetPair], r: int = r) -> bool:
            return bool(invariant_dim(_tilde_lambdas([x.first for x in t]), q - p + r, r))

        specs += [
            InequalitySpec("s-pq-r-le", p, q, r, 0, *t, "le") for t in _gated(triples, r_le, jobs)
        ]
        specs += [
            InequalitySpec("s-pq-r-ge", p, q, r, 0, *t, "ge") for t in _gated(triples, r_ge, jobs)
        ]

    for s in range(1, q):
        pairs = [SubsetPair(Subset.empty(p), sub) for sub in enumerate_subsets(q, s)]
        triples = _triples(pairs)

        def s_le(t: tuple[SubsetPair, SubsetPair, SubsetPair], s: int = s) -> bool:
            return bool(invariant_dim(_lambdas([x.second for x in t]), s - q, s))

        def s_ge(t: tuple[SubsetPair, SubsetPair, SubsetPair], s: int = s) -> bool:
            return bool(invariant_dim(_tilde_lambdas([x.second for x in t]), p - q + s, s))

        specs += [
            InequalitySpec("s-pq-s-le", p, q, 0, s, *t, "le") for t in _gated(triples, s_le, jobs)
        ]
        specs += [
            InequalitySpec("s-pq-s-ge", p, q, 0, s, *t, "ge") for t in _gated(triples, s_ge, jobs)
        ]

    for r in range(1, p):
        for s in range(1, min(r, q - 1) + 1):
            triples = _triples(enumerate_subset_pairs(p, q, r, s))

            def mixed(
                t: tuple[SubsetPair, SubsetPair, SubsetPair], r: int = r, s: int = s
            ) -> bool:
                return witness_mu_exists(p, q, r, s, *t) is not None

            specs += [
                InequalitySpec("s-pq-mixed", p, q, r, s, *t, "le")
                for t in _gated(triples, mixed, jobs)
            ]

    logger.debug("generate_s_inequalities(%d, %d): %d specs", p, q, len(specs))
    return specs


def ressayre_inequalities(p: int, q: int, *, jobs: int = 1) -> list[InequalitySpec]:
    """S(p, q) straight from the cohomological condition.

    After the balance equality, every ``(r, s) ∉ {(0, 0), (p, q)}`` and index
    triple with :func:`~horncone.schubert.cohomological_condition` gives
    ``|X'|_{I'} + |Y'|_{J'} + |Z'|_{K'} <= |X''|_{I''} + |Y''|_{J''} + |Z''|_{K''}``.
    """
    _check_pq(p, q)
    return list(_RESSAYRE_MEMO.get_or_compute((p, q), lambda: _generate_ressayre(p, q, jobs)))


def _generate_ressayre(p: int, q: int, jobs: int) -> list[InequalitySpec]:
    full = SubsetPair(Subset.full(p), Subset.full(q))
    specs = [InequalitySpec("s-pq-balance", p, q, p, q, full, full, full, "eq")]
    for r in range(p + 1):
        for s in range(q + 1):
            if (r, s) in ((0, 0), (p, q)):
                continue
            triples = _triples(enumerate_subset_pairs(p, q, r, s))

            def condition(
                t: tuple[SubsetPair, SubsetPair, SubsetPair], r: int = r, s: int = s
            ) -> bool:
                return cohomological_condition(p, q, r, s, *t)

            specs += [
                InequalitySpec("s-pq-ressayre", p, q, r, s, *t, "le")
                for t in _gated(triples, condition, jobs)
            ]
    logger.debug("ressayre_inequalities(%d, %d): %d specs", p, q, len(specs))
    return specs


_THETA_FAMILIES = {
    "s-pq-balance": "trace-equality",
    "s-pq-block": "first-block",
    "s-pq-r-le": "r-le",
    "s-pq-r-ge": "r-ge",
    "s-pq-s-le": "s-ge",
    "s-pq-s-ge": "s-le",
    "s-pq-mixed": "mixed-rs",
}

_FLIPPED_SENSE = {"le": "ge", "ge": "le", "eq": "eq"}


def _ressayre_family(spec: InequalitySpec) -> str:
    if spec.s == 0:
        return "first-block" if spec.r == spec.p else "r-le"
    if spec.r == 0:
        return "s-le"
    return "mixed-rs"


def theta_inequality(spec: InequalitySpec) -> InequalitySpec:
    """Move an S(p, q) inequality to the Horn(p, q) coordinates ``(A, B, C)``.

    With ``(X, Y, Z) = Θ(A, B, C)`` the index triple becomes
    ``((I', Ĩ''), (J', J̃''), (K̃', K''))``; an inequality living on the second
    block alone changes sense.  The result holds at ``(A, B, C)`` exactly
    when ``spec`` holds at ``Θ(A, B, C)``.

    Raises:
        ValueError: If ``spec`` is not an S(p, q) inequality.
    """
    if spec.is_horn:
        raise ValueError(f"{spec.family!r} is already a Horn(p, q) inequality")
    family = _THETA_FAMILIES.get(spec.family) or _ressayre_family(spec)
    signed = spec.family in ("s-pq-balance", "s-pq-mixed", "s-pq-ressayre")
    sense = spec.sense if signed or spec.r > 0 else _FLIPPED_SENSE[spec.sense]
    i = SubsetPair(spec.I.first, tilde_subset(spec.I.second))
    j = SubsetPair(spec.J.first, tilde_subset(spec.J.second))
    k = SubsetPair(tilde_subset(spec.K.first), spec.K.second)
    return InequalitySpec(family, spec.p, spec.q, spec.r, spec.s, i, j, k, sense)


# ---------------------------------------------------------------------------
# Cone membership
# ---------------------------------------------------------------------------


def _point(triple: Sequence[SpectrumPair], p: int, q: int) -> tuple[Fraction, ...]:
    for pair in triple:
        if (pair.p, pair.q) != (p, q):
            raise ValueError(f"spectrum pair of shape ({pair.p}, {pair.q}), expected ({p}, {q})")
    return triple[0].values + triple[1].values + triple[2].values


def horn_pq_cone(
    A: SpectrumPair | WeightPair | Sequence[Sequence[Any]],  # noqa: N803
    B: SpectrumPair | WeightPair | Sequence[Sequence[Any]],  # noqa: N803
    C: SpectrumPair | WeightPair | Sequence[Sequence[Any]],  # noqa: N803
    p: int,
    q: int,
    *,
    gate: str = "oracle",
) -> MembershipResult:
    """Decide ``(A, B, C) ∈ Horn(p, q)`` by evaluating :func:`generate_inequalities`.

    Raises:
        ValueError: On shape mismatch or ``p < q``.
    """
    point = _point([as_spectrum_pair(x) for x in (A, B, C)], p, q)
    violated = first_violation(generate_inequalities(p, q, gate=gate), point)
    return MembershipResult(member=violated is None, certificate=violated)


def s_pq_cone(
    X: SpectrumPair | WeightPair | Sequence[Sequence[Any]],  # noqa: N803
    Y: SpectrumPair | WeightPair | Sequence[Sequence[Any]],  # noqa: N803
    Z: SpectrumPair | WeightPair | Sequence[Sequence[Any]],  # noqa: N803
    p: int,
    q: int,
    *,
    route: str = "summary",
) -> MembershipResult:
    """Decide ``(X, Y, Z) ∈ S(p, q)``.

    Args:
        route: ``"summary"`` uses :func:`generate_s_inequalities`,
            ``"cohomology"`` uses :func:`ressayre_inequalities`.
    """
    if route not in ("summary", "cohomology"):
        raise ValueError(f"route must be 'summary' or 'cohomology', got {route!r}")
    point = _point([as_spectrum_pair(x) for x in (X, Y, Z)], p, q)
    _check_pq(p, q)
    specs = generate_s_inequalities(p, q) if route == "summary" else ressayre_inequalities(p, q)
    violated = first_violation(specs, point)
    return MembershipResult(member=violated is None, certificate=violated)


def holomorphic_chamber(pair: SpectrumPair | Sequence[Sequence[Any]]) -> bool:
    """Strict interlacing ``x_p > x_{p+1}`` of the holomorphic chamber ``C_{p,q}``."""
    spectra = as_spectrum_pair(pair)
    if not spectra.first.values or not spectra.second.values:
        return True
    return spectra.first.values[-1] > spectra.second.values[0]


def horn_hol_membership(
    A: SpectrumPair | Sequence[Sequence[Any]],  # noqa: N803
    B: SpectrumPair | Sequence[Sequence[Any]],  # noqa: N803
    C: SpectrumPair | Sequence[Sequence[Any]],  # noqa: N803
    p: int,
    q: int,
) -> bool:
    """``(A, B, C) ∈ Horn_hol(p, q) = Horn(p, q) ∩ (C_{p,q})^3``."""
    triple = [as_spectrum_pair(x) for x in (A, B, C)]
    _point(triple, p, q)
    if not all(holomorphic_chamber(x) for x in triple):
        return False
    return horn_pq_cone(*triple, p, q).member


def horn_pq_semigroup_result(
    lam: WeightPair | Sequence[Sequence[int]],
    mu: WeightPair | Sequence[Sequence[int]],
    nu: WeightPair | Sequence[Sequence[int]],
    p: int,
    q: int,
) -> MembershipResult:
    """:func:`horn_pq_semigroup` with the multiplicity, as a membership result."""
    witness = horn_pq_semigroup(lam, mu, nu, p, q)
    if witness is None:
        return MembershipResult(member=False, reason="no partition a satisfies both conditions")
    return MembershipResult(
        member=True, witness=witness, multiplicity=horn_pq_multiplicity(lam, mu, nu, p, q)
    )

"""Littlewood-Richardson coefficients and ``GL_n`` tensor multiplicities.

This is the arithmetic oracle behind every semigroup test and every cup
product in the package:

* :func:`lr_coefficient` counts LR skew tableaux by depth-first search.
* :func:`tensor_decompose` decomposes ``V_λ ⊗ V_μ`` for ``GL_n`` with
  determinant twists, by shifting to partitions and truncating to length n.
* :func:`invariant_dim` computes ``dim [V_1 ⊗ ... ⊗ V_k ⊗ det^d]^{GL_n}``.

Results are memoized in process-wide :class:`Memo` tables which are safe to
share between threads.
"""

from __future__ import annotations

import logging
import threading
from collections.abc import Callable, Hashable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Any, Generic, TypeVar

from .combinatorics import (
    GLWeight,
    Partition,
    as_partition,
    as_weight,
    dual_weight,
    partitions_of,
    shift_weight,
)

logger = logging.getLogger(__name__)

V = TypeVar("V")

# ---------------------------------------------------------------------------
# Memoization
# ---------------------------------------------------------------------------


class Memo(Generic[V]):
    """A dictionary memo with atomic insert-if-absent.

    The value is computed outside the lock, so two threads may compute the
    same entry; the first insert wins and both callers see that value.

    Args:
        name: Label used in log messages and :func:`cache_info`.
    """

    def __init__(self, name: str) -> None:
        self.name = name
        self._data: dict[Hashable, V] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, key: Hashable, compute: Callable[[], V]) -> V:
        with self._lock:
            if key in self._data:
                self.hits += 1
                return self._data[key]
        value = compute()
        with self._lock:
            self.misses += 1
            return self._data.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        return len(self._data)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Memo({self.name!r}, size={len(self)}, hits={self.hits}, misses={self.misses})"


_MEMOS: list[Memo[Any]] = []


def register_memo(name: str) -> Memo[Any]:
    """Create a memo table that :func:`clear_caches` knows about."""
    memo: Memo[Any] = Memo(name)
    _MEMOS.append(memo)
    return memo


def clear_caches() -> None:
    """Drop every registered memo table."""
    for memo in _MEMOS:
        memo.clear()
    logger.debug("Cleared %d memo tables", len(_MEMOS))


def cache_info() -> dict[str, dict[str, int]]:
    """Return size and hit statistics for every registered memo table."""
    return {
        memo.name: {"size": len(memo), "hits": memo.hits, "misses": memo.misses}
        for memo in _MEMOS
    }


_LR_MEMO: Memo[int] = register_memo("lr_coefficient")
_PRODUCT_MEMO: Memo[dict[Partition, int]] = register_memo("lr_product")
_DECOMPOSE_MEMO: Memo[Decomposition] = register_memo("tensor_decompose")
_INVARIANT_MEMO: Memo[int] = register_memo("invariant_dim")


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------


@dataclass
class Decomposition:
    """A finite ``GL_n`` representation, as multiplicities of irreducibles.

    Attributes:
        n: The rank.
        entries: Map from highest weight (length ``n``) to multiplicity >= 1.
    """

    n: int
    entries: dict[GLWeight, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: dict[GLWeight, int] = {}
        for weight, mult in self.entries.items():
            if weight.n != self.n:
                raise ValueError(f"weight {weight.to_list()} is not a GL_{self.n} weight")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {weight.to_list()}")
            if mult:
                cleaned[weight] = mult
        self.entries = dict(sorted(cleaned.items(), reverse=True))

    def multiplicity(self, weight: GLWeight | Sequence[int]) -> int:
        return self.entries.get(as_weight(weight, self.n), 0)

    def __iter__(self) -> Iterator[tuple[GLWeight, int]]:
        return iter(self.entries.items())

    def __len__(self) -> int:
        return len(self.entries)

    def to_dict(self) -> dict[str, int]:
        return {str(w.to_list()).replace(" ", ""): m for w, m in self.entries.items()}


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients
# ---------------------------------------------------------------------------


def _count_lr_tableaux(nu: Partition, lam: Partition, mu: Partition) -> int:
    """Count LR fillings of ``ν/λ`` with content ``μ``.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left), so the lattice condition can be checked on every prefix.
    """
    cells = [
        (i, j)
        for i in range(nu.length)
        for j in range(nu.row(i + 1) - 1, lam.row(i + 1) - 1, -1)
    ]
    content = mu.parts
    counts = [0] * len(content)
    filling: dict[tuple[int, int], int] = {}

    def place(index: int) -> int:
        if index == len(cells):
            return 1
        i, j = cells[index]
        high = len(content)
        right = filling.get((i, j + 1))
        if right is not None:
            high = min(high, right)
        above = filling.get((i - 1, j))
        low = above + 1 if above is not None else 1
        total = 0
        for value in range(low, high + 1):
            slot = value - 1
            if counts[slot] == content[slot]:
                continue
            if slot > 0 and counts[slot] + 1 > counts[slot - 1]:
                continue
            counts[slot] += 1
            filling[(i, j)] = value
            total += place(index + 1)
            del filling[(i, j)]
            counts[slot] -= 1
        return total

    return place(0)


def lr_coefficient(
    nu: Partition | Sequence[int],
    lam: Partition | Sequence[int],
    mu: Partition | Sequence[int],
) -> int:
    """The Littlewood-Richardson coefficient ``c^ν_{λμ}``.

    Args:
        nu: The outer shape.
        lam: The inner shape.
        mu: The content.

    Returns:
        The number of LR skew tableaux of shape ``ν/λ`` and content ``μ``;
        zero unless ``λ ⊂ ν`` and ``|λ| + |μ| = |ν|``.
    """
    outer, inner, content = as_partition(nu), as_partition(lam), as_partition(mu)
    if outer.size != inner.size + content.size:
        return 0
    if not outer.contains(inner) or not outer.contains(content):
        return 0
    if not content.parts or not inner.parts:
        return 1 if outer in (inner, content) else 0
    return _LR_MEMO.get_or_compute(
        (outer, inner, content), lambda: _count_lr_tableaux(outer, inner, content)
    )


def lr_product(
    lam: Partition | Sequence[int],
    mu: Partition | Sequence[int],
    max_length: int | None = None,
) -> dict[Partition, int]:
    """Expand the Schur product ``s_λ s_μ = Σ c^ν_{λμ} s_ν``.

    Args:
        lam: First factor.
        mu: Second factor.
        max_length: Drop every ``ν`` with more rows than this.

    Returns:
        Map from ``ν`` to ``c^ν_{λμ}`` (nonzero entries only), with keys in
        descending lexicographic order.
    """
    left, right = as_partition(lam), as_partition(mu)
    limit = left.length + right.length
    if max_length is not None:
        limit = min(limit, max_length)

    def compute() -> dict[Partition, int]:
        result: dict[Partition, int] = {}
        for nu in partitions_of(left.size + right.size, limit, left.row(1) + right.row(1)):
            if not nu.contains(left) or not nu.contains(right):
                continue
            coefficient = lr_coefficient(nu, left, right)
            if coefficient:
                result[nu] = coefficient
        return dict(sorted(result.items(), reverse=True))

    return _PRODUCT_MEMO.get_or_compute((left, right, limit), compute)


# ---------------------------------------------------------------------------
# GL_n tensor products
# ---------------------------------------------------------------------------


def _to_partition_shift(weight: GLWeight) -> tuple[Partition, int]:
    """Return ``(λ + k·1, k)`` with ``k`` chosen so the last entry is zero."""
    k = -weight.parts[-1] if weight.parts else 0
    return shift_weight(weight, k).as_partition(), k


def tensor_decompose(
    lam: GLWeight | Sequence[int], mu: GLWeight | Sequence[int], n: int
) -> Decomposition:
    """Decompose ``V_λ ⊗ V_μ`` for ``GL_n``.

    Both weights are shifted by constants to become partitions, the Schur
    product is truncated to length ``n`` and the keys are shifted back.
    """
    left, right = as_weight(lam, n), as_weight(mu, n)
    if n == 0:
        return Decomposition(0, {GLWeight(()): 1})

    def compute() -> Decomposition:
        lam_part, k = _to_partition_shift(left)
        mu_part, l_shift = _to_partition_shift(right)
        entries = {
            shift_weight(nu.to_weight(n), -(k + l_shift)): mult
            for nu, mult in lr_product(lam_part, mu_part, max_length=n).items()
        }
        return Decomposition(n, entries)

    return _DECOMPOSE_MEMO.get_or_compute((left, right), compute)


def gl_multiplicity(
    nu: GLWeight | Sequence[int],
    lam: GLWeight | Sequence[int],
    mu: GLWeight | Sequence[int],
    n: int,
) -> int:
    """Multiplicity of ``V_ν`` in ``V_λ ⊗ V_μ`` for ``GL_n``."""
    target, left, right = as_weight(nu, n), as_weight(lam, n), as_weight(mu, n)
    if n == 0:
        return 1
    if target.size != left.size + right.size:
        return 0
    lam_part, k = _to_partition_shift(left)
    mu_part, l_shift = _to_partition_shift(right)
    shifted = shift_weight(target, k + l_shift)
    if not shifted.is_polynomial():
        return 0
    return lr_coefficient(shifted.as_partition(), lam_part, mu_part)


def invariant_dim(
    factors: Sequence[GLWeight | Sequence[int]], det_power: int, n: int
) -> int:
    """``dim [V_{f_1} ⊗ ... ⊗ V_{f_k} ⊗ det^{det_power}]^{GL_n}``.

    The first ``k - 1`` factors are decomposed left to right; the answer is
    the multiplicity of the dual of the last factor (twisted by the
    determinant power) in that decomposition.

    The Horn oracles pass three or four factors.  Any nonzero count is
    accepted: with a single factor the result is 1 exactly when
    ``V_{f_1} ⊗ det^{det_power}`` is the trivial character.

    Args:
        factors: One or more weights of length ``n``.
        det_power: Power of the determinant character.
        n: The rank.

    Returns:
        The dimension of the invariant subspace.
    """
    weights = [as_weight(f, n) for f in factors]
    if not weights:
        raise ValueError("invariant_dim needs at least one factor")
    if sum(w.size for w in weights) + n * det_power != 0:
        return 0
    if n == 0:
        return 1
    key = (tuple(sorted(weights)), det_power, n)
    return _INVARIANT_MEMO.get_or_compute(key, lambda: _invariant_dim(key[0], det_power, n))


def _invariant_dim(weights: Sequence[GLWeight], det_power: int, n: int) -> int:
    target = dual_weight(shift_weight(weights[-1], det_power))
    if len(weights) == 1:
        return 1 if target == GLWeight.zero(n) else 0
    current: dict[GLWeight, int] = {weights[0]: 1}
    for factor in weights[1:-1]:
        folded: dict[GLWeight, int] = {}
        for weight, mult in current.items():
            for nu, inner in tensor_decompose(weight, factor, n):
                folded[nu] = folded.get(nu, 0) + mult * inner
        current = folded
    return current.get(target, 0)

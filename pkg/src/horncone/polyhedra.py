"""Exact linear algebra over systems of rational linear constraints.

Everything here uses :class:`fractions.Fraction`; there is no floating-point
path.  :func:`lp_optimize` is a dense two-phase simplex with Bland's
anti-cycling rule, which is plenty for the few hundred rows in
``3(p + q)`` variables that the Horn generators produce.  On top of it sit
:func:`implies`, :func:`equivalent` and :func:`filter_redundant`.
"""

from __future__ import annotations

import json
import logging
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Union

from .inequality import format_rational, parse_rational

if TYPE_CHECKING:
    from .inequality import InequalitySpec

logger = logging.getLogger(__name__)

Rational = Fraction

# ---------------------------------------------------------------------------
# Constraints and systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Constraint:
    """``coeffs · x <= rhs`` or ``coeffs · x = rhs``.

    ``ge`` input is negated into ``le``.  Coefficients and right-hand side
    are scaled to coprime integers; an equality has its first nonzero
    coefficient positive.
    """

    coeffs: tuple[Fraction, ...]
    sense: str = "le"
    rhs: Fraction = Fraction(0)
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.sense not in ("le", "ge", "eq"):
            raise ValueError(f"sense must be 'le', 'ge' or 'eq', got {self.sense!r}")
        values = [parse_rational(c) for c in self.coeffs] + [parse_rational(self.rhs)]
        sense = self.sense
        if sense == "ge":
            values = [-v for v in values]
            sense = "le"
        scale = math.lcm(*(v.denominator for v in values))
        ints = [int(v * scale) for v in values]
        divisor = math.gcd(*ints) if any(ints) else 1
        ints = [v // divisor for v in ints]
        if sense == "eq" and next((v for v in ints if v), 0) < 0:
            ints = [-v for v in ints]
        object.__setattr__(self, "coeffs", tuple(Fraction(v) for v in ints[:-1]))
        object.__setattr__(self, "rhs", Fraction(ints[-1]))
        object.__setattr__(self, "sense", sense)

    @property
    def dimension(self) -> int:
        return len(self.coeffs)

    def value(self, x: Sequence[Fraction | int]) -> Fraction:
        return sum((c * Fraction(v) for c, v in zip(self.coeffs, x) if c), Fraction(0))

    def satisfied(self, x: Sequence[Fraction | int]) -> bool:
        value = self.value(x)
        return value == self.rhs if self.sense == "eq" else value <= self.rhs

    def key(self) -> tuple[tuple[Fraction, ...], str, Fraction]:
        return (self.coeffs, self.sense, self.rhs)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "coeffs": [format_rational(c) for c in self.coeffs],
            "sense": self.sense,
            "rhs": format_rational(self.rhs),
        }
        if self.label:
            data["label"] = self.label
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Constraint:
        try:
            return cls(
                tuple(parse_rational(c) for c in data["coeffs"]),
                data.get("sense", "le"),
                parse_rational(data.get("rhs", 0)),
                data.get("label", ""),
            )
        except KeyError as exc:
            raise ValueError(f"constraint record is missing {exc}") from exc


RowLike = Union[Constraint, tuple[Sequence[Any], str], tuple[Sequence[Any], str, Any]]


def as_constraint(row: RowLike) -> Constraint:
    if isinstance(row, Constraint):
        return row
    if len(row) == 2:
        coeffs, sense = row  # type: ignore[misc]
        return Constraint(tuple(coeffs), sense)
    coeffs, sense, rhs = row  # type: ignore[misc]
    return Constraint(tuple(coeffs), sense, parse_rational(rhs))


@dataclass(frozen=True)
class LinearSystem:
    """A finite list of constraints in a fixed dimension, kept in order."""

    dimension: int
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self) -> None:
        if self.dimension < 0:
            raise ValueError(f"dimension must be >= 0, got {self.dimension}")
        for index, constraint in enumerate(self.constraints):
            if constraint.dimension != self.dimension:
                raise ValueError(
                    f"constraint {index} has {constraint.dimension} coefficients, "
                    f"expected {self.dimension}"
                )

    @classmethod
    def of(cls, dimension: int, rows: Iterable[RowLike]) -> LinearSystem:
        return cls(dimension, tuple(as_constraint(row) for row in rows))

    @classmethod
    def from_inequalities(cls, specs: Sequence[InequalitySpec]) -> LinearSystem:
        """The homogeneous system cut out by a list of inequality specs."""
        if not specs:
            raise ValueError("cannot infer the dimension of an empty inequality list")
        dimension = specs[0].dimension
        return cls(
            dimension,
            tuple(
                Constraint(tuple(Fraction(c) for c in spec.row()), spec.sense, Fraction(0),
                           spec.render())
                for spec in specs
            ),
        )

    @property
    def equalities(self) -> list[Constraint]:
        return [c for c in self.constraints if c.sense == "eq"]

    @property
    def inequalities(self) -> list[Constraint]:
        return [c for c in self.constraints if c.sense == "le"]

    def __len__(self) -> int:
        return len(self.constraints)

    def __iter__(self) -> Iterator[Constraint]:
        return iter(self.constraints)

    def __getitem__(self, index: int) -> Constraint:
        return self.constraints[index]

    def contains(self, x: Sequence[Fraction | int]) -> bool:
        return evaluate(self, x)[0]

    def extended(self, rows: Iterable[Constraint]) -> LinearSystem:
        return LinearSystem(self.dimension, self.constraints + tuple(rows))

    def keys(self) -> set[tuple[tuple[Fraction, ...], str, Fraction]]:
        """The set of normalized constraints, for order-insensitive comparison."""
        return {c.key() for c in self.constraints}

    def to_dict(self) -> dict[str, Any]:
        return {"dimension": self.dimension, "rows": [c.to_dict() for c in self.constraints]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> LinearSystem:
        try:
            return cls(int(data["dimension"]),
                       tuple(Constraint.from_dict(row) for row in data["rows"]))
        except KeyError as exc:
            raise ValueError(f"linear system record is missing {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> LinearSystem:
        return cls.from_dict(json.loads(text))


def evaluate(system: LinearSystem, x: Sequence[Fraction | int]) -> tuple[bool, int | None]:
    """Check ``x`` against each constraint in order.

    Returns:
        ``(True, None)`` if every constraint holds, otherwise ``(False, i)``
        for the first failing constraint ``i``.

    Raises:
        ValueError: If ``x`` has the wrong length.
    """
    if len(x) != system.dimension:
        raise ValueError(f"expected a point of dimension {system.dimension}, got {len(x)}")
    for index, constraint in enumerate(system.constraints):
        if not constraint.satisfied(x):
            return False, index
    return True, None


# ---------------------------------------------------------------------------
# Exact simplex
# ---------------------------------------------------------------------------


OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass
class LPResult:
    """Outcome of :func:`lp_optimize`.

    Attributes:
        status: ``"optimal"``, ``"unbounded"`` or ``"infeasible"``.
        value: Optimal objective value.
        point: An optimal point, or a feasible point when unbounded.
        ray: A feasible direction improving the objective without bound.
    """

    status: str
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None
    ray: tuple[Fraction, ...] | None = None


class SimplexTableau:
    """Dense tableau in canonical form: ``rows[i]`` has a unit in ``basis[i]``.

    Columns are the split variables ``u, v`` (``x = u - v``), one slack per
    inequality and one artificial per row.
    """

    def __init__(self, system: LinearSystem) -> None:
        d = system.dimension
        inequalities = [i for i, c in enumerate(system.constraints) if c.sense == "le"]
        slack_of = {row: 2 * d + k for k, row in enumerate(inequalities)}
        self.d = d
        self.first_artificial = 2 * d + len(inequalities)
        m = len(system.constraints)
        width = self.first_artificial + m
        self.rows: list[list[Fraction]] = []
        self.rhs: list[Fraction] = []
        self.basis: list[int] = []
        for i, constraint in enumerate(system.constraints):
            row = [Fraction(0)] * width
            for j, c in enumerate(constraint.coeffs):
                row[j] = c
                row[d + j] = -c
            if i in slack_of:
                row[slack_of[i]] = Fraction(1)
            rhs = constraint.rhs
            if rhs < 0:
                row = [-v for v in row]
                rhs = -rhs
            row[self.first_artificial + i] = Fraction(1)
            self.rows.append(row)
            self.rhs.append(rhs)
            self.basis.append(self.first_artificial + i)
        self.width = width
        self.pivots = 0

    def pivot(self, r: int, j: int) -> None:
        pivot_row = self.rows[r]
        factor = pivot_row[j]
        pivot_row[:] = [v / factor for v in pivot_row]
        self.rhs[r] /= factor
        for i, row in enumerate(self.rows):
            if i == r or not row[j]:
                continue
            ratio = row[j]
            row[:] = [a - ratio * b for a, b in zip(row, pivot_row)]
            self.rhs[i] -= ratio * self.rhs[r]
        self.basis[r] = j
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction], allowed: int) -> list[Fraction]:
        reduced = list(cost[:allowed])
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(allowed):
                    if row[j]:
                        reduced[j] -= cb * row[j]
        return reduced

    def minimize(self, cost: Sequence[Fraction], allowed: int) -> int | None:
        """Run simplex iterations over the first ``allowed`` columns.

        Returns:
            ``None`` at an optimum, or the entering column of an unbounded
            direction.
        """
        while True:
            reduced = self.reduced_costs(cost, allowed)
            entering = next((j for j in range(allowed) if reduced[j] < 0), None)
            if entering is None:
                return None
            best: tuple[Fraction, int, int] | None = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    candidate = (self.rhs[i] / row[entering], self.basis[i], i)
                    if best is None or candidate[:2] < best[:2]:
                        best = candidate
            if best is None:
                return entering
            self.pivot(best[2], entering)

    def values(self) -> list[Fraction]:
        z = [Fraction(0)] * self.width
        for i, b in enumerate(self.basis):
            z[b] = self.rhs[i]
        return z

    def point(self) -> tuple[Fraction, ...]:
        z = self.values()
        return tuple(z[j] - z[self.d + j] for j in range(self.d))

    def ray(self, entering: int) -> tuple[Fraction, ...]:
        dz = [Fraction(0)] * self.width
        dz[entering] = Fraction(1)
        for i, b in enumerate(self.basis):
            dz[b] = -self.rows[i][entering]
        return tuple(dz[j] - dz[self.d + j] for j in range(self.d))

    def drive_out_artificials(self) -> None:
        """Pivot artificials out of the basis; drop rows where that is impossible."""
        keep: list[int] = []
        for i in range(len(self.rows)):
            if self.basis[i] < self.first_artificial:
                keep.append(i)
                continue
            column = next(
                (j for j in range(self.first_artificial) if self.rows[i][j]), None
            )
            if column is None:
                continue
            self.pivot(i, column)
            keep.append(i)
        self.rows = [self.rows[i] for i in keep]
        self.rhs = [self.rhs[i] for i in keep]
        self.basis = [self.basis[i] for i in keep]


def lp_optimize(
    objective: Sequence[Fraction | int],
    system: LinearSystem,
    *,
    maximize: bool = True,
) -> LPResult:
    """Optimize ``objective · x`` over the solutions of ``system``.

    Args:
        objective: Coefficient vector of length ``system.dimension``.
        system: The feasible region; variables are free.
        maximize: Maximize (default) or minimize.

    Returns:
        An :class:`LPResult`; pathologies are reported through ``status``.
    """
    if len(objective) != system.dimension:
        raise ValueError(
            f"objective has {len(objective)} coefficients, expected {system.dimension}"
        )
    tableau = SimplexTableau(system)
    phase_one = [Fraction(0)] * tableau.width
    for j in range(tableau.first_artificial, tableau.width):
        phase_one[j] = Fraction(1)
    tableau.minimize(phase_one, tableau.width)
    infeasibility = sum(
        (tableau.rhs[i] for i, b in enumerate(tableau.basis) if b >= tableau.first_artificial),
        Fraction(0),
    )
    if infeasibility > 0:
        return LPResult(INFEASIBLE)
    tableau.drive_out_artificials()

    sign = -1 if maximize else 1
    d = system.dimension
    cost = [Fraction(0)] * tableau.width
    for j, c in enumerate(objective):
        cost[j] = sign * Fraction(c)
        cost[d + j] = -sign * Fraction(c)
    entering = tableau.minimize(cost, tableau.first_artificial)
    point = tableau.point()
    logger.debug("lp_optimize: %d rows, %d pivots", len(system), tableau.pivots)
    if entering is not None:
        return LPResult(UNBOUNDED, point=point, ray=tableau.ray(entering))
    value = sum((Fraction(c) * x for c, x in zip(objective, point)), Fraction(0))
    return LPResult(OPTIMAL, value=value, point=point)


# ---------------------------------------------------------------------------
# Implication and redundancy
# ---------------------------------------------------------------------------


def _as_system(rows: LinearSystem | Sequence[Constraint], dimension: int) -> LinearSystem:
    if isinstance(rows, LinearSystem):
        return rows
    return LinearSystem(dimension, tuple(rows))


def implies(rows: LinearSystem | Sequence[Constraint], target: Constraint) -> bool:
    """Whether every solution of ``rows`` satisfies ``target``.

    Raises:
        RuntimeError: If ``rows`` has no solution at all.
    """
    system = _as_system(rows, target.dimension)
    if target.sense == "eq":
        upper = Constraint(target.coeffs, "le", target.rhs)
        lower = Constraint(target.coeffs, "ge", target.rhs)
        return implies(system, upper) and implies(system, lower)
    result = lp_optimize(target.coeffs, system)
    if result.status == INFEASIBLE:
        raise RuntimeError(f"constraint system of {len(system)} rows is infeasible")
    if result.status == UNBOUNDED:
        return False
    assert result.value is not None
    return result.value <= target.rhs


def equivalent(first: LinearSystem, second: LinearSystem) -> bool:
    """Whether two systems have the same solution set."""
    if first.dimension != second.dimension:
        raise ValueError(f"dimensions differ: {first.dimension} and {second.dimension}")
    return all(implies(second, c) for c in first) and all(implies(first, c) for c in second)


def irredundant_indices(
    system: LinearSystem, context: Sequence[Constraint] | None = None
) -> list[int]:
    """Indices kept by :func:`filter_redundant`, in order."""
    extra = list(context or [])
    removed: set[int] = set()
    for index, constraint in enumerate(system.constraints):
        if constraint.sense == "eq":
            continue
        remainder = [
            c for k, c in enumerate(system.constraints) if k != index and k not in removed
        ]
        if implies(LinearSystem(system.dimension, tuple(remainder + extra)), constraint):
            removed.add(index)
            logger.debug("filter_redundant: dropping %s", constraint.label or index)
    return [i for i in range(len(system)) if i not in removed]


def filter_redundant(
    system: LinearSystem, context: Sequence[Constraint] | None = None
) -> LinearSystem:
    """Drop every inequality implied by the others, in one pass in listed order.

    Equalities are always kept.  ``context`` rows are assumed while testing
    but never returned.  Applying the filter twice gives the same system.

    Raises:
        RuntimeError: If the system (with context) is infeasible.
    """
    kept = irredundant_indices(system, context)
    logger.debug("filter_redundant: kept %d of %d rows", len(kept), len(system))
    return LinearSystem(system.dimension, tuple(system.constraints[i] for i in kept))

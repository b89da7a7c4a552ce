"""Tests for Schubert calculus, Euler classes and the cohomological condition."""

from __future__ import annotations

import itertools

import pytest

from horncone.combinatorics import (
    Partition,
    Subset,
    SubsetPair,
    box_complement,
    enumerate_subset_pairs,
    partitions_in_box,
)
from horncone.lr_engine import Decomposition, invariant_dim, tensor_decompose
from horncone.schubert import (
    CohomologyClass,
    GrassmannianRing,
    TensorClass,
    chern_quotient,
    chern_tautological,
    cohomological_condition,
    cup_product,
    delta_pullback,
    euler_boundary,
    euler_class,
    euler_class_vrs,
    euler_product_bundle,
    is_point_multiple,
    phi,
    power,
    product,
    ressayre_data,
    total_chern,
    witness_mu_exists,
)

P = Partition


def pair(first: tuple[int, ...], second: tuple[int, ...], p: int, q: int) -> SubsetPair:
    return SubsetPair(Subset(p, first), Subset(q, second))


# ---------------------------------------------------------------------------
# Rings and classes
# ---------------------------------------------------------------------------


class TestClasses:
    def test_keys_must_fit_the_box(self):
        ring = GrassmannianRing(2, 2)
        with pytest.raises(ValueError, match="does not index"):
            ring.sigma((3,))

    def test_zero_coefficients_are_dropped(self):
        ring = GrassmannianRing(1, 1)
        x = CohomologyClass(ring, {P((1,)): 0, P(): 2})
        assert x.coeffs == {P(): 2}
        assert (ring.sigma((1,)) + 2 * ring.zero()).coeffs == {P((1,)): 1}

    def test_homogeneity(self):
        ring = GrassmannianRing(2, 2)
        assert (ring.sigma((2,)) + ring.sigma((1, 1))).is_homogeneous()
        assert not (ring.sigma((1,)) + ring.unit()).is_homogeneous()

    def test_serialization(self):
        ring = GrassmannianRing(2, 2)
        x = ring.sigma((2,)) + ring.sigma((1, 1))
        assert x.to_dict() == {"ring": [2, 2], "coeffs": {"[1,1]": 1, "[2]": 1}}
        t = TensorClass.pure(ring.sigma((1,)), GrassmannianRing(1, 1).unit())
        assert t.to_dict()["coeffs"] == {"[1]|[]": 1}

    def test_mismatched_rings(self):
        with pytest.raises(ValueError):
            GrassmannianRing(1, 1).unit() + GrassmannianRing(2, 1).unit()
        with pytest.raises(ValueError):
            cup_product(GrassmannianRing(1, 1).unit(), GrassmannianRing(2, 1).unit())


# ---------------------------------------------------------------------------
# Cup products
# ---------------------------------------------------------------------------


def test_cup_product_examples():
    ring = GrassmannianRing(2, 2)
    assert (ring.sigma((1,)) * ring.sigma((1,))).coeffs == {P((1, 1)): 1, P((2,)): 1}
    assert (ring.sigma((1, 1)) * ring.sigma((2,))).is_zero()
    x = ring.sigma((2, 1))
    assert (ring.unit() * x).coeffs == x.coeffs


def test_power_of_hyperplane_class():
    ring = GrassmannianRing(2, 2)
    assert is_point_multiple(power(ring.sigma((1,)), 4)) == 2
    assert power(ring.sigma((1,)), 0).coeffs == {P(): 1}


def test_product_of_empty_sequence():
    with pytest.raises(ValueError):
        product([])


@pytest.mark.parametrize(("m", "n"), [(2, 2), (2, 3)])
def test_ring_axioms(m, n):
    ring = GrassmannianRing(m, n)
    basis = [ring.sigma(lam) for lam in ring.basis()]
    for a, b in itertools.product(basis, repeat=2):
        assert cup_product(a, b).coeffs == cup_product(b, a).coeffs
    for a, b, c in itertools.product(basis, repeat=3):
        left = cup_product(cup_product(a, b), c)
        right = cup_product(a, cup_product(b, c))
        assert left.coeffs == right.coeffs


def test_poincare_duality():
    for m in range(1, 4):
        for n in range(1, 4):
            ring = GrassmannianRing(m, n)
            for lam in ring.basis():
                for other in ring.basis():
                    if lam.size + other.size != m * n:
                        continue
                    result = ring.sigma(lam) * ring.sigma(other)
                    if other == box_complement(lam, m, n):
                        assert result.coeffs == ring.point_class().coeffs
                    else:
                        assert result.is_zero()


def test_point_criterion_matches_invariants():
    for m in range(1, 4):
        for n in range(1, 4):
            ring = GrassmannianRing(m, n)
            basis = ring.basis()
            for a, b, c in itertools.combinations_with_replacement(basis, 3):
                if a.size + b.size + c.size != m * n:
                    continue
                cohomology = is_point_multiple(product(ring.sigma(x) for x in (a, b, c)))
                dim = invariant_dim([x.to_weight(m) for x in (a, b, c)], -n, m)
                assert (cohomology is not None) == (dim != 0)
                if cohomology is not None:
                    assert cohomology == dim


def test_is_point_multiple():
    ring = GrassmannianRing(2, 2)
    assert is_point_multiple(ring.sigma((1, 1)) * ring.sigma((1, 1))) == 1
    assert is_point_multiple(ring.sigma((2,)) * ring.sigma((1, 1))) is None
    assert is_point_multiple(3 * ring.point_class()) == 3
    assert is_point_multiple(ring.zero()) is None
    assert is_point_multiple(ring.point_class() + ring.unit()) is None


# ---------------------------------------------------------------------------
# φ and δ*
# ---------------------------------------------------------------------------


def test_phi_of_symmetric_and_exterior_powers():
    ring = GrassmannianRing(3, 2)
    assert phi(P((2,)), ring).coeffs == {P((2,)): 1}
    assert phi(P((1, 1, 1)), ring).coeffs == {P((1, 1, 1)): 1}
    assert phi(P((3,)), ring).is_zero()


def test_phi_of_a_decomposition():
    ring = GrassmannianRing(2, 1)
    decomposition = tensor_decompose((1, 0), (1, 0), 2)
    assert phi(decomposition, ring).coeffs == {P((1, 1)): 1}
    assert phi(Decomposition(2, {}), ring).is_zero()


def test_phi_is_a_ring_morphism_on_products():
    ring = GrassmannianRing(2, 2)
    decomposition = tensor_decompose((1, 0), (1, 0), 2)
    expected = phi(P((1,)), ring) * phi(P((1,)), ring)
    assert phi(decomposition, ring).coeffs == expected.coeffs


def test_delta_pullback():
    x = GrassmannianRing(2, 3).sigma((2, 1))
    image = delta_pullback(x)
    assert image.ring == GrassmannianRing(3, 2)
    assert image.coeffs == {P((2, 1)): 1}
    assert delta_pullback(GrassmannianRing(1, 3).sigma((2,))).coeffs == {P((1, 1)): 1}
    assert delta_pullback(GrassmannianRing(2, 2).unit()).coeffs == {P(): 1}


@pytest.mark.parametrize(("m", "n"), [(2, 2), (2, 3), (1, 3)])
def test_delta_pullback_is_multiplicative(m, n):
    ring = GrassmannianRing(m, n)
    for a, b in itertools.product(ring.basis(), repeat=2):
        x, y = ring.sigma(a), ring.sigma(b)
        left = delta_pullback(x * y)
        right = delta_pullback(x) * delta_pullback(y)
        assert left.coeffs == right.coeffs


# ---------------------------------------------------------------------------
# Chern and Euler classes
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(("m", "n"), [(1, 1), (2, 2), (2, 3), (3, 2)])
def test_whitney_relation(m, n):
    ring = GrassmannianRing(m, n)
    signed = ring.zero()
    for k in range(n + 1):
        signed = signed + (-1) ** k * chern_quotient(ring, k)
    assert (total_chern(ring) * signed).coeffs == {P(): 1}


def test_chern_classes_out_of_range():
    ring = GrassmannianRing(2, 2)
    assert chern_tautological(ring, 3).is_zero()
    assert chern_quotient(ring, -1).is_zero()
    assert chern_tautological(ring, 2).coeffs == {P((1, 1)): 1}


def test_euler_product_bundle_on_p1_times_p1():
    euler = euler_product_bundle(1, 1, 1, 1)
    assert euler.coeffs == {(P(), P((1,))): 1, (P((1,)), P()): 1}


def test_euler_product_bundle_needs_positive_dimensions():
    with pytest.raises(ValueError):
        euler_product_bundle(0, 1, 1, 1)


def test_euler_class_vrs_examples():
    assert euler_class_vrs(2, 2, 1, 1).coeffs == {(P(), P((1,))): 1, (P((1,)), P()): 1}
    assert euler_class_vrs(3, 3, 1, 2).is_zero()
    assert euler_class_vrs(3, 2, 2, 1).coeffs == {(P(), P((1,))): 1, (P((1,)), P()): 1}


def test_euler_class_vrs_rejects_boundary():
    with pytest.raises(ValueError):
        euler_class_vrs(2, 2, 0, 1)
    with pytest.raises(ValueError):
        euler_class_vrs(1, 2, 1, 1)


def test_euler_classes_vanish_and_have_the_right_degree():
    for p in range(1, 5):
        for q in range(1, p + 1):
            for r in range(1, p):
                for s in range(1, q):
                    euler = euler_class_vrs(p, q, r, s)
                    if s > r:
                        assert euler.is_zero()
                    for lam, mu in euler.coeffs:
                        assert lam.size + mu.size == (p - r) * s


def test_euler_boundary_cases():
    assert euler_boundary(2, 2, 0, 2).is_zero()
    assert euler_boundary(2, 1, 1, 0).coeffs == {(P(), P()): 1}
    assert euler_boundary(2, 2, 2, 1).coeffs == {(P(), P()): 1}
    # s = q: (σ_{p-r})^q on G(r, p - r)
    assert euler_boundary(2, 1, 1, 1).coeffs == {(P((1,)), P()): 1}
    # r = 0: (σ_s)^p has degree p·s above dim G(q - s, s)
    assert euler_boundary(2, 2, 0, 1).is_zero()
    with pytest.raises(ValueError):
        euler_boundary(2, 2, 1, 1)
    with pytest.raises(ValueError):
        euler_boundary(2, 2, 0, 0)


def test_euler_class_dispatches():
    assert euler_class(2, 2, 1, 1).coeffs == euler_class_vrs(2, 2, 1, 1).coeffs
    assert euler_class(2, 2, 0, 2).is_zero()


# ---------------------------------------------------------------------------
# Cohomological condition and witnesses
# ---------------------------------------------------------------------------


def test_cohomological_condition_examples():
    i = j = pair((2,), (), 2, 1)
    k = pair((1,), (), 2, 1)
    assert cohomological_condition(2, 1, 1, 0, i, j, k)
    flag = pair((), (1,), 2, 1)
    assert not cohomological_condition(2, 1, 0, 1, flag, flag, flag)
    full = pair((1, 2), (), 2, 2)
    assert cohomological_condition(2, 2, 2, 0, full, full, full)


def test_cohomological_condition_validates():
    good = pair((1,), (1,), 2, 2)
    with pytest.raises(ValueError):
        cohomological_condition(2, 2, 0, 0, good, good, good)
    with pytest.raises(ValueError):
        cohomological_condition(2, 2, 1, 0, good, good, good)
    with pytest.raises(ValueError):
        cohomological_condition(1, 2, 1, 1, good, good, good)


@pytest.mark.parametrize(("p", "q"), [(2, 2), (3, 2)])
def test_witness_agrees_with_cohomology(p, q):
    for r in range(1, p):
        for s in range(1, min(r, q - 1) + 1):
            pairs = enumerate_subset_pairs(p, q, r, s)
            for i, j, k in itertools.product(pairs, repeat=3):
                witness = witness_mu_exists(p, q, r, s, i, j, k)
                assert (witness is not None) == cohomological_condition(p, q, r, s, i, j, k)
                if witness is not None:
                    assert witness in partitions_in_box(s, p - r)


def test_witness_needs_interior_index():
    good = pair((1,), (1,), 2, 2)
    with pytest.raises(ValueError):
        witness_mu_exists(2, 2, 0, 1, good, good, good)
    wide = pair((1,), (1, 2), 3, 3)
    with pytest.raises(ValueError):
        witness_mu_exists(3, 3, 1, 2, wide, wide, wide)


def test_witness_degree_mismatch():
    top = pair((2,), (2,), 2, 2)
    assert witness_mu_exists(2, 2, 1, 1, top, top, top) is None


def test_ressayre_data_for_one_one():
    data = ressayre_data(1, 1)
    assert [(d.r, d.s) for d in data] == [(1, 0)]
    assert data[0].I == pair((1,), (), 1, 1)

"""Tests for the classical Horn cone Horn(n) and its triple tables."""

from __future__ import annotations

import itertools
import os
from fractions import Fraction

import pytest

from horncone.cache import TripleCache
from horncone.combinatorics import GLWeight, Subset, weights_in_range
from horncone.horn_classical import (
    HornTripleTable,
    Spectrum,
    horn_n_cone,
    horn_n_inequalities,
    horn_n_multiplicity,
    horn_n_semigroup,
    horn_triple_table,
)
from horncone.lr_engine import clear_caches

from .helpers import golden, normal_forms


def subsets(n, *elements):
    return tuple(Subset(n, e) for e in elements)


# ---------------------------------------------------------------------------
# Spectrum
# ---------------------------------------------------------------------------


class TestSpectrum:
    def test_parses_rationals(self):
        spectrum = Spectrum.of(["3/2", 1, Fraction(-1, 2)])
        assert spectrum.values == (Fraction(3, 2), Fraction(1), Fraction(-1, 2))
        assert spectrum.total == 2
        assert spectrum.to_list() == ["3/2", "1/1", "-1/2"]

    def test_must_be_weakly_decreasing(self):
        with pytest.raises(ValueError, match="weakly decreasing"):
            Spectrum.of([0, 1])

    def test_rejects_scalars(self):
        with pytest.raises(ValueError, match="spectrum must be a list"):
            Spectrum.of(1)
        with pytest.raises(ValueError, match="spectrum must be a list"):
            horn_n_cone(1, 2, 3, 1)

    def test_partial_sums_and_dual(self):
        spectrum = Spectrum.of([3, 1, 0])
        assert spectrum.partial(Subset(3, (1, 3))) == 3
        assert spectrum.dual() == Spectrum.of([0, -1, -3])
        assert spectrum.scaled(Fraction(1, 2)).values == (Fraction(3, 2), Fraction(1, 2), 0)
        with pytest.raises(ValueError):
            spectrum.partial(Subset(2, (1,)))


# ---------------------------------------------------------------------------
# Semigroup oracle
# ---------------------------------------------------------------------------


def test_horn_n_semigroup_examples():
    assert horn_n_semigroup((1, 0), (1, 0), (1, 1), 2)
    assert not horn_n_semigroup((1, 0), (1, 0), (3, -1), 2)
    assert horn_n_semigroup((0, 0, 0), (0, 0, 0), (0, 0, 0), 3)
    assert horn_n_multiplicity((2, 1, 0), (2, 1, 0), (3, 2, 1)) == 2


# ---------------------------------------------------------------------------
# Triple tables
# ---------------------------------------------------------------------------


def test_triple_table_two_one():
    table = horn_triple_table(2, 1)
    assert set(table.triples) == {
        subsets(2, (2,), (2,), (2,)),
        subsets(2, (1,), (2,), (1,)),
        subsets(2, (2,), (1,), (1,)),
    }
    assert subsets(2, (1,), (1,), (1,)) not in table


def test_triple_table_three_one():
    table = horn_triple_table(3, 1)
    expected = {
        subsets(3, (i,), (j,), (k,))
        for i, j, k in itertools.product(range(1, 4), repeat=3)
        if i + j == k + 3
    }
    assert set(table.triples) == expected
    assert len(table) == 6


@pytest.mark.parametrize(("n", "r"), [(1, 1), (3, 0), (3, 3)])
def test_triple_table_range(n, r):
    with pytest.raises(ValueError):
        horn_triple_table(n, r)


def test_triple_table_is_deterministic_under_jobs():
    clear_caches()
    serial = horn_triple_table(4, 2).triples
    clear_caches()
    parallel = horn_triple_table(4, 2, jobs=4).triples
    assert parallel == serial


def test_triple_table_dict_validation():
    table = horn_triple_table(3, 2)
    assert HornTripleTable.from_dict(table.to_dict()).triples == table.triples
    bad = {"n": 3, "r": 1, "triples": [[[1, 2], [1], [1]]]}
    with pytest.raises(ValueError):
        HornTripleTable.from_dict(bad)


def test_triple_table_membership_uses_a_fixed_index():
    first, second = subsets(2, (1,), (2,), (2,)), subsets(2, (2,), (1,), (2,))
    table = HornTripleTable(2, 1, [first, second])
    assert isinstance(table.triples, tuple)
    assert first in table and second in table
    assert subsets(2, (1,), (1,), (1,)) not in table
    assert "not a triple" not in table
    loaded = HornTripleTable.from_dict(table.to_dict())
    assert first in loaded and len(loaded) == 2
    assert loaded == table


def test_triple_table_is_cached(tmp_path):
    cache = TripleCache(str(tmp_path))
    table = horn_triple_table(3, 1, cache=cache)
    path = cache.path_for(3, 1)
    assert os.path.isfile(path)
    loaded = cache.load(3, 1)
    assert loaded is not None
    assert loaded.triples == table.triples
    assert horn_triple_table(3, 1, cache=cache).triples == table.triples


# ---------------------------------------------------------------------------
# Inequalities and cone membership
# ---------------------------------------------------------------------------


def test_horn_two_inequalities():
    specs = horn_n_inequalities(2)
    assert specs[0].family == "trace-equality"
    assert normal_forms(specs) == golden(
        ["a1+a2+b1+b2 = c1+c2", "a1+b2 <= c1", "a2+b1 <= c1", "a2+b2 <= c2"], 2
    )


def test_horn_three_has_weyl_and_dual_families():
    specs = horn_n_inequalities(3)
    assert len(specs) == 13
    assert [s.r for s in specs[1:]] == [1] * 6 + [2] * 6
    texts = {s.render() for s in specs}
    assert "a1+b3 <= c1" in texts
    assert "a2+a3+b2+b3 <= c2+c3" in texts


def test_recursive_gate_agrees_with_oracle():
    assert normal_forms(horn_n_inequalities(3, recursive=True)) == normal_forms(
        horn_n_inequalities(3)
    )


def test_horn_n_inequalities_rejects_bad_n():
    with pytest.raises(ValueError):
        horn_n_inequalities(0)


def test_horn_n_cone_examples():
    assert horn_n_cone([1, 0], [1, 0], [1, 1]).member
    result = horn_n_cone([1, 0], [1, 0], [2, 1])
    assert not result.member
    assert result.certificate.family == "trace-equality"
    assert horn_n_cone([0, 0, 0], [0, 0, 0], [0, 0, 0]).member


def test_horn_n_cone_certificate():
    result = horn_n_cone([1, 0], [1, 0], [3, -1])
    assert not result
    assert result.certificate.render() == "a2+b2 <= c2"


def test_horn_n_cone_rationals():
    assert horn_n_cone(["1/2", 0], ["1/2", 0], [1, 0]).member
    assert horn_n_cone(["1/2", 0], ["1/2", 0], ["1/2", "1/2"]).member
    assert not horn_n_cone(["1/2", 0], ["1/2", 0], ["3/2", "-1/2"]).member


def test_horn_n_cone_length_mismatch():
    with pytest.raises(ValueError):
        horn_n_cone([1, 0], [1], [1, 0])
    with pytest.raises(ValueError):
        horn_n_cone([1, 0], [1, 0], [1, 1], 3)


@pytest.mark.parametrize("n", [2, 3])
def test_saturation_on_grid(n):
    grid = weights_in_range(n, 0, 3)
    for lam, mu, nu in itertools.product(grid, repeat=3):
        cone = horn_n_cone(lam.parts, mu.parts, nu.parts).member
        assert cone == horn_n_semigroup(lam, mu, nu, n), (lam, mu, nu)


def test_scaling_and_symmetry():
    triples = [
        ([3, 1, 0], [2, 2, 0], [4, 3, 1]),
        ([3, 1, 0], [2, 2, 0], [5, 3, 0]),
        ([2, 0, 0], [1, 0, 0], [1, 1, 1]),
    ]
    for a, b, c in triples:
        expected = horn_n_cone(a, b, c).member
        assert horn_n_cone(b, a, c).member == expected
        for t in (Fraction(1, 3), Fraction(5, 2)):
            scaled = [Spectrum.of(x).scaled(t) for x in (a, b, c)]
            assert horn_n_cone(*scaled).member == expected
    assert horn_n_semigroup(GLWeight((3, 1, 0)), GLWeight((2, 2, 0)), GLWeight((4, 3, 1)), 3)

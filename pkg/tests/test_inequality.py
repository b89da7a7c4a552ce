"""Tests for the InequalitySpec data model and membership results."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from horncone.combinatorics import Partition, Subset, SubsetPair
from horncone.inequality import (
    InequalitySpec,
    MembershipResult,
    first_violation,
    format_rational,
    integer_point,
    normalize_row,
    parse_rational,
)


def pair(first, second, p, q):
    return SubsetPair(Subset(p, tuple(first)), Subset(q, tuple(second)))


@pytest.fixture()
def mixed():
    """The Horn(2, 2) inequality a2+a4+b2+b4 <= c1+c4."""
    i = pair([2], [2], 2, 2)
    k = pair([1], [2], 2, 2)
    return InequalitySpec("mixed-rs", 2, 2, 1, 1, i, i, k, "le")


# ---------------------------------------------------------------------------
# Rationals
# ---------------------------------------------------------------------------


def test_rational_round_trip():
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(4) == "4/1"
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_rational(" 5 ") == 5
    assert parse_rational(Fraction(1, 3)) == Fraction(1, 3)


@pytest.mark.parametrize("bad", ["1/0", "abc", True, ""])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


# ---------------------------------------------------------------------------
# Coefficients and rendering
# ---------------------------------------------------------------------------


class TestInequalitySpec:
    def test_coefficients(self, mixed):
        assert mixed.coeffs == ((0, 1, 0, 1), (0, 1, 0, 1), (-1, 0, 0, -1))
        assert mixed.dimension == 12
        assert mixed.is_horn

    def test_render(self, mixed):
        assert mixed.render() == "a2+a4+b2+b4 <= c1+c4"
        assert str(mixed) == mixed.render()

    def test_signed_family_renders_in_xyz(self):
        i = pair([1], [1], 1, 1)
        spec = InequalitySpec("s-pq-ressayre", 1, 1, 1, 1, i, i, i, "le")
        assert spec.coeffs == ((1, -1), (1, -1), (1, -1))
        assert spec.render() == "x1+y1+z1 <= x2+y2+z2"

    def test_unsigned_s_family(self):
        i = pair([1, 2], [], 2, 1)
        spec = InequalitySpec("s-pq-block", 2, 1, 2, 0, i, i, i, "le")
        assert spec.render() == "x1+x2+y1+y2+z1+z2 <= 0"

    def test_normal_form(self):
        i = pair([1], [], 2, 1)
        k = pair([2], [], 2, 1)
        spec = InequalitySpec("r-ge", 2, 1, 1, 0, i, i, k, "ge")
        assert spec.render() == "a1+b1 >= c2"
        row, sense = spec.normal_form()
        assert sense == "le"
        assert row == (-1, 0, 0, -1, 0, 0, 0, 1, 0)

    def test_holds(self, mixed):
        point = [0] * 12
        assert mixed.holds(point)
        point[1] = 1
        assert not mixed.holds(point)
        with pytest.raises(ValueError):
            mixed.holds([0, 0])

    def test_validation(self):
        i = pair([1], [], 2, 1)
        with pytest.raises(ValueError, match="unknown inequality family"):
            InequalitySpec("bogus", 2, 1, 1, 0, i, i, i, "le")
        with pytest.raises(ValueError, match="sense"):
            InequalitySpec("r-le", 2, 1, 1, 0, i, i, i, "lt")
        with pytest.raises(ValueError, match="cardinalities"):
            InequalitySpec("r-le", 2, 1, 2, 0, i, i, i, "le")
        with pytest.raises(ValueError, match="does not live"):
            InequalitySpec("r-le", 3, 1, 1, 0, i, i, i, "le")

    def test_json_round_trip(self, mixed):
        data = json.loads(mixed.to_json())
        assert data["family"] == "mixed-rs"
        assert data["I"] == {"Ip": [2], "Is": [2]}
        assert data["coeffs"]["C"] == ["-1/1", "0/1", "0/1", "-1/1"]
        assert data["text"] == "a2+a4+b2+b4 <= c1+c4"
        restored = InequalitySpec.from_json(mixed.to_json())
        assert restored == mixed
        assert restored.coeffs == mixed.coeffs

    def test_from_dict_checks_stored_coefficients(self, mixed):
        data = mixed.to_dict()
        data["coeffs"]["A"] = ["1/1", "0/1", "0/1", "0/1"]
        with pytest.raises(ValueError, match="do not match"):
            InequalitySpec.from_dict(data)
        del data["sense"]
        with pytest.raises(ValueError, match="missing"):
            InequalitySpec.from_dict(data)

    def test_sort_key_orders_by_family(self, mixed):
        full = pair([1, 2], [1, 2], 2, 2)
        trace = InequalitySpec("trace-equality", 2, 2, 2, 2, full, full, full, "eq")
        assert sorted([mixed, trace], key=InequalitySpec.sort_key) == [trace, mixed]


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def test_normalize_row():
    assert normalize_row([2, -4, 0], "le") == ((1, -2, 0), "le")
    assert normalize_row([2, -4, 0], "ge") == ((-1, 2, 0), "le")
    assert normalize_row([-3, 3], "eq") == ((1, -1), "eq")
    assert normalize_row([Fraction(1, 2), Fraction(1, 3)], "le") == ((3, 2), "le")
    assert normalize_row([0, 0], "le") == ((0, 0), "le")


def test_integer_point_keeps_signs():
    assert integer_point([Fraction(1, 2), Fraction(-1, 3), 2]) == [3, -2, 12]


def test_first_violation(mixed):
    full = pair([1, 2], [1, 2], 2, 2)
    trace = InequalitySpec("trace-equality", 2, 2, 2, 2, full, full, full, "eq")
    point = [0, Fraction(1, 2), 0, 0] + [0] * 4 + [Fraction(1, 2), 0, 0, 0]
    assert first_violation([trace, mixed], point) is None
    point[3] = 1
    assert first_violation([trace, mixed], point) is trace


def test_membership_result():
    result = MembershipResult(member=True, witness=Partition((1,)), multiplicity=1)
    assert result
    assert result.to_dict() == {
        "member": True,
        "certificate": None,
        "witness": [1],
        "multiplicity": 1,
        "reason": "",
    }
    assert not MembershipResult(member=False, reason="no witness")

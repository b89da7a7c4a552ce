"""Golden inequality lists for small Horn(p, q) and agreement of the three descriptions."""

from __future__ import annotations

import pytest

from horncone.horn_pq import (
    generate_inequalities,
    generate_s_inequalities,
    ressayre_inequalities,
    theta_inequality,
)
from horncone.polyhedra import LinearSystem, equivalent

from .helpers import golden, normal_forms

GOLDEN = {
    (1, 1): [
        "a1+a2+b1+b2 = c1+c2",
        "a1+b1 <= c1",
    ],
    (2, 1): [
        "a1+a2+a3+b1+b2+b3 = c1+c2+c3",
        "a1+a2+b1+b2 <= c1+c2",
        "a1+b2 <= c1",
        "a2+b1 <= c1",
        "a2+b2 <= c2",
        "a1+b1 >= c2",
    ],
    (2, 2): [
        "a1+a2+a3+a4+b1+b2+b3+b4 = c1+c2+c3+c4",
        "a1+a2+b1+b2 <= c1+c2",
        "a1+b2 <= c1",
        "a2+b1 <= c1",
        "a2+b2 <= c2",
        "a3+b3 >= c3",
        "a3+b4 >= c4",
        "a4+b3 >= c4",
        "a2+a4+b2+b4 <= c1+c4",
        "a2+a4+b2+b4 <= c2+c3",
        "a2+a4+b1+b4 <= c1+c3",
        "a1+a4+b2+b4 <= c1+c3",
        "a2+a4+b2+b3 <= c1+c3",
        "a2+a3+b2+b4 <= c1+c3",
    ],
}

SHAPES = sorted(GOLDEN)


@pytest.mark.parametrize(("p", "q"), SHAPES)
def test_raw_list_matches_golden(p, q):
    specs = generate_inequalities(p, q)
    assert len(specs) == len(GOLDEN[(p, q)])
    assert normal_forms(specs) == golden(GOLDEN[(p, q)], p + q)


@pytest.mark.parametrize(("p", "q"), SHAPES)
def test_filtered_list_matches_golden(p, q):
    specs = generate_inequalities(p, q, filtered=True)
    assert normal_forms(specs) == golden(GOLDEN[(p, q)], p + q)


def test_two_one_renders_in_emission_order():
    assert [spec.render() for spec in generate_inequalities(2, 1)] == GOLDEN[(2, 1)]


def _block_pattern(p, q):
    pattern = [("trace-equality", p, q), ("first-block", p, 0)]
    for r in range(1, p):
        pattern += [("r-le", r, 0), ("r-ge", r, 0)]
    for s in range(1, q):
        pattern += [("s-ge", 0, s), ("s-le", 0, s)]
    for r in range(1, p):
        pattern += [("mixed-rs", r, s) for s in range(1, min(r, q - 1) + 1)]
    return pattern


@pytest.mark.parametrize(("p", "q"), [*SHAPES, (3, 1), (3, 2)])
def test_families_follow_emission_order(p, q):
    specs = generate_inequalities(p, q)
    blocks = []
    for spec in specs:
        key = (spec.family, spec.r, spec.s)
        if not blocks or blocks[-1] != key:
            blocks.append(key)
    present = set(blocks)
    assert blocks == [key for key in _block_pattern(p, q) if key in present]
    for key in blocks:
        triples = [(s.I, s.J, s.K) for s in specs if (s.family, s.r, s.s) == key]
        assert triples == sorted(triples)


@pytest.mark.parametrize(("p", "q"), SHAPES)
def test_theta_moves_s_description_onto_horn(p, q):
    moved = {theta_inequality(spec).normal_form() for spec in generate_s_inequalities(p, q)}
    assert moved == normal_forms(generate_inequalities(p, q))


@pytest.mark.parametrize(("p", "q"), SHAPES)
def test_ressayre_and_summary_describe_the_same_cone(p, q):
    summary = LinearSystem.from_inequalities(generate_s_inequalities(p, q))
    cohomology = LinearSystem.from_inequalities(ressayre_inequalities(p, q))
    assert equivalent(summary, cohomology)

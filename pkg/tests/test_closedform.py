"""Closed-form counts: Turán quantities, the Eckhoff split, pattern counts."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest

from turanext.closedform import (
    Params,
    anchored_degree_count,
    check_count_step_identity,
    eckhoff_bound,
    eckhoff_decompose,
    kst_asymptotic_constant,
    multipartite_pattern_count,
    multiplicity_for,
    pointed_pattern_count,
    step_asymptotic_constant,
    turan_clique_count,
    turan_edge_count,
    turan_kst_count,
    turan_min_clique_degree,
    turan_part_sizes,
)
from turanext.counting import clique_masks, count_cliques, count_copies
from turanext.errors import InternalCheckError
from turanext.graphs import complete_multipartite, turan_graph


def test_params_validation():
    with pytest.raises(ValueError):
        Params(0, 1, 1)
    with pytest.raises(ValueError):
        Params(2, 0, 1)
    with pytest.raises(ValueError):
        Params(2, 3, 2)  # t < s


def test_params_properties():
    p = Params(3, 2, 5)
    assert p.gap == 3
    assert p.weight == Fraction(1)
    assert p.multiplicity == 2
    assert p.part_sizes() == (2, 2, 5)
    q = Params(3, 2, 2)
    assert q.weight == Fraction(1, 2)
    assert q.multiplicity == 1
    assert Params(2, 1, 1) == Params(2, 1, 1)
    assert len({Params(2, 1, 1), Params(2, 1, 1), Params(2, 1, 2)}) == 2


def test_multiplicity_for():
    assert multiplicity_for(2, 2, 4) == 1
    assert multiplicity_for(2, 3, 4) == 3


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("n", range(0, 21, 4))
def test_turan_sizes_and_edges_match_reality(n, r):
    sizes = turan_part_sizes(n, r)
    assert sum(sizes) == n
    assert max(sizes) - min(sizes) <= 1
    assert sorted(sizes, reverse=True) == list(sizes)
    if n >= 1:
        g = turan_graph(n, r)
        assert g.edge_count() == turan_edge_count(n, r)


@pytest.mark.parametrize("r", range(1, 5))
@pytest.mark.parametrize("m", range(1, 5))
def test_turan_clique_count_vs_counter(r, m):
    for n in range(1, 13):
        want = count_cliques(turan_graph(n, r), m)
        assert turan_clique_count(n, r, m) == want


@pytest.mark.parametrize("r,m", [(2, 2), (3, 2), (3, 3), (4, 3)])
def test_turan_min_clique_degree_vs_counter(r, m):
    for n in range(r + 1, 12):
        g = turan_graph(n, r)
        per_vertex = [
            sum(1 for mask in clique_masks(g, m) if (mask >> v) & 1)
            for v in range(n)
        ]
        assert turan_min_clique_degree(n, r, m) == min(per_vertex)


# ---------------------------------------------------------------------------
# the edge-count split and the clique bound it feeds


def test_eckhoff_decompose_examples():
    assert eckhoff_decompose(7, 2) == (5, 1)
    assert eckhoff_decompose(10, 3) == (5, 2)
    assert eckhoff_decompose(0, 2) == (1, 0)


@pytest.mark.parametrize("omega", range(2, 8))
def test_eckhoff_decompose_reconstructs(omega):
    for e in range(0, 80):
        order, extra = eckhoff_decompose(e, omega)
        assert turan_edge_count(order, omega) + extra == e
        # the split is the canonical one: extra does not fill the next step
        assert turan_edge_count(order + 1, omega) > e


def test_eckhoff_bound_examples_and_edge_identity():
    assert eckhoff_bound(10, 3, 3) == 5
    for omega in range(2, 7):
        for e in range(0, 60):
            assert eckhoff_bound(e, omega, 2) == e


def test_eckhoff_bound_rejects_bad_m():
    with pytest.raises(ValueError):
        eckhoff_bound(5, 3, 1)
    with pytest.raises(ValueError):
        eckhoff_bound(5, 2, 3)


# ---------------------------------------------------------------------------
# multipartite pattern counts against the generic counter


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


@pytest.mark.parametrize("r", [2, 3])
def test_pattern_count_matches_counter_on_all_small_hosts(r):
    """Dual route: closed-form counts vs the embedding counter, sums <= 12."""
    for s in range(1, 4):
        for t in range(s, 4):
            p = Params(r, s, t)
            pattern = complete_multipartite(p.part_sizes())
            for total in range(r, 13):
                for comp in _compositions(total, r):
                    host = complete_multipartite(comp)
                    assert multipartite_pattern_count(comp, p) == count_copies(
                        host, pattern
                    ), (comp, s, t)


def test_pointed_count_is_ordered_variant():
    p = Params(2, 1, 1)
    # K2 in K_{3,4}: pointed counts both orientations of the distinguished part
    assert pointed_pattern_count((3, 4), p) == 24
    assert multipartite_pattern_count((3, 4), p) == 12


def test_kst_count_examples():
    assert turan_kst_count(8, Params(2, 1, 3)) == 32
    assert turan_kst_count(6, Params(3, 1, 1)) == 8
    assert turan_kst_count(3, Params(3, 1, 1)) == 1
    assert turan_kst_count(2, Params(3, 1, 1)) == 0


def test_anchored_degree_count_values():
    # r=2, s=t=1: the anchor sees every opposite vertex
    for n in range(2, 9):
        for a in range(n):
            assert anchored_degree_count(Params(2, 1, 1), a, n) == a
    assert anchored_degree_count(Params(2, 1, 2), 2, 6) == 7
    assert anchored_degree_count(Params(2, 1, 2), 0, 6) == 0


def test_anchored_degree_count_validation():
    with pytest.raises(ValueError):
        anchored_degree_count(Params(1, 1, 1), 0, 4)
    with pytest.raises(ValueError):
        anchored_degree_count(Params(2, 1, 1), 4, 4)


def test_count_step_identity_small_grid():
    for r in (2, 3):
        for s, t in ((1, 1), (1, 2), (2, 3)):
            for n in range(r + 1, 40):
                assert check_count_step_identity(Params(r, s, t), n)


# ---------------------------------------------------------------------------
# asymptotic constants: ratios tighten toward 1 as n doubles


@pytest.mark.parametrize("r", [2, 3])
def test_asymptotic_constants_converge(r):
    for s in range(1, 4):
        for t in range(s, 4):
            p = Params(r, s, t)
            power = (r - 1) * s + t
            kst_c = float(kst_asymptotic_constant(p))
            step_c = float(step_asymptotic_constant(p))
            kst_err = []
            step_err = []
            for n in (1000, 2000, 4000):
                x = n / r
                kst_err.append(abs(turan_kst_count(n, p) / (kst_c * x**power) - 1))
                a = (r - 1) * n // r
                step_err.append(
                    abs(anchored_degree_count(p, a, n) / (step_c * x ** (power - 1)) - 1)
                )
            for errs in (kst_err, step_err):
                for before, after in zip(errs, errs[1:]):
                    # strictly closer, except degenerate cases that are exact
                    assert after < before or after < 1e-12, (s, t, errs)
                assert errs[2] < 0.05

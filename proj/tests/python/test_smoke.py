import itertools
import random

import pytest

import localprop as lp


def test_core_examples():
    assert lp.color_energy(lp.monochromatic(4)) == 36
    assert lp.color_energy(lp.rainbow(5)) == 10
    aab = lp.ColoredCompleteGraph(3, [0, 0, 1])
    assert lp.color_histogram(aab) == [2, 1]
    assert lp.cauchy_schwarz_floor(aab) == 5
    assert lp.verify_local_property(lp.rainbow(6), lp.LocalSpec(4, 6))["holds"]
    verdict = lp.verify_local_property(lp.monochromatic(5), lp.LocalSpec(3, 2))
    assert verdict == {"holds": False, "witness": ([0, 1, 2], 1)}


def test_energy_is_a_python_int_beyond_64_bits():
    assert lp.color_energy(lp.monochromatic(300)) == (300 * 299 // 2) ** 2


def test_edge_index_matches_row_major_order():
    pairs = list(itertools.combinations(range(6), 2))
    assert [lp.edge_index(6, i, j) for i, j in pairs] == list(range(len(pairs)))


def test_sparse_keys_are_densified():
    assert lp.ColoredCompleteGraph(3, [40, -7, 40]).edge_colors == [1, 0, 1]


def test_bad_spec_raises():
    with pytest.raises(ValueError):
        lp.LocalSpec(3, 4)
    with pytest.raises(ValueError):
        lp.ColoredCompleteGraph(3, [0, 1])


def test_solver_and_search():
    r = lp.min_colors(5, lp.LocalSpec(3, 3))
    assert r["status"] == "optimal" and r["value"] == 5
    assert lp.verify_local_property(r["certificate"], lp.LocalSpec(3, 3))["holds"]
    g = lp.g_search(4, lp.LocalSpec(4, 5), 10)
    assert g["value"] == 5
    assert len(lp.difference_set(g["certificate"])) == 5


def test_number_sets():
    assert lp.difference_set([1, 2, 4, 7]) == [1, 2, 3, 5, 6]
    assert lp.sum_set([1, 2, 4]) == [2, 3, 4, 5, 6, 8]
    assert lp.additive_energy([1, 2, 3]) == 19
    assert lp.additive_energy([1, 2, 5, 11]) == 28
    rng = random.Random(5)
    for _ in range(50):
        a = sorted(rng.sample(range(-20, 20), rng.randint(1, 7)))
        brute = sum(1 for w, x, y, z in itertools.product(a, repeat=4) if w + x == y + z)
        assert lp.additive_energy(a) == brute


def test_constructions():
    b = lp.behrend_set(32)
    assert len(b) == 32
    assert lp.verify_no_3ap(b) is None
    assert lp.verify_isosceles_free(lp.collinear_point_set(b)) is None
    assert lp.verify_no_3ap([1, 2, 3]) == [1, 2, 3]
    assert lp.eg_color_count(100, lp.LocalSpec(4, 4)) == 22
    assert lp.random_coloring(6, 5, 9).edge_colors == lp.random_coloring(6, 5, 9).edge_colors


def test_forbidden_and_profile():
    assert lp.counting_lemma_find(4, [[1, 2]] * 16, 2) == ([1, 2], 2)
    assert lp.counting_lemma_find(10, [[1, 2], [3, 4], [5, 6]], 2) is None
    prof = lp.dyadic_profile(lp.monochromatic(8), 6, 2)
    assert prof["bin_count"] == [0, 0, 0, 0, 1]

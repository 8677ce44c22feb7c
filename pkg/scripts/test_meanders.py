import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from itertools import permutations

import pytest

from config.settings import settings
from meanders.arches import (catalan, dyck_word, has_crossing, is_motzkin_path, is_planar, motzkin,
                             motzkin_path, pairing_from_dyck, planar_pairings)
from meanders.sif import (connected_blocks, count_sif, factorized_meander_set, is_connected_perm, is_sif,
                          sif_blocks_intervals, sif_blocks_shifts, sif_decompose, sif_factorization_check,
                          sif_series_check)
from meanders.systems import (MeanderEnumerator, MeanderSystem, components_by_cycles, concatenate,
                              count_irreducible, dyck_pattern_exclusion, irreducibility,
                              irreducible_series_check, lower_pairing, meander_components_table,
                              meander_pairings, meander_set)
from oracle.permutations import compose, cyclic_shift, identity
from utils.errors import ResourceError, UsageError


# --- arcos ---

@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_planar_pairings_are_catalan(n):
    assert len(planar_pairings(n)) == catalan(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_stack_and_crossing_tests_agree(n):
    for p in permutations(range(n)):
        assert is_planar(p) == (not has_crossing(p))


def test_dyck_words():
    assert planar_pairings(3) == [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 1, 0)]
    assert pairing_from_dyck(dyck_word((1, 2, 0))) == (1, 2, 0)
    with pytest.raises(UsageError):
        dyck_word((2, 0, 1))
    with pytest.raises(UsageError):
        pairing_from_dyck("DU")


def test_motzkin_numbers():
    assert [motzkin(n) for n in range(7)] == [1, 1, 2, 4, 9, 21, 51]


# --- M_σ ---

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_identity_gives_catalan(n):
    assert meander_set(identity(n)) == catalan(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_unit_shifts_give_motzkin(n):
    assert meander_set(cyclic_shift(n, 1)) == motzkin(n)
    assert meander_set(cyclic_shift(n, -1)) == motzkin(n)


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (5, 3), (6, 2), (6, 3), (6, 4)])
def test_other_shifts_give_n(n, k):
    assert meander_set(cyclic_shift(n, k)) == n


def test_meander_set_examples():
    assert meander_set(identity(3)) == 5
    assert meander_set(cyclic_shift(4, 1)) == 9
    assert meander_set(cyclic_shift(5, 2)) == 5
    assert meander_set((0, 2, 1)) == 4


@pytest.mark.parametrize("n", [3, 4])
def test_cyclic_conjugation_invariance(n):
    for sigma in permutations(range(n)):
        for p in range(1, n):
            conjugated = compose(cyclic_shift(n, p), compose(sigma, cyclic_shift(n, -p)))
            assert meander_set(conjugated) == meander_set(sigma), (sigma, p)


def test_meander_set_rejects_size_mismatch():
    with pytest.raises(UsageError):
        meander_pairings((0, 1, 2), (0, 1))
    with pytest.raises(UsageError):
        lower_pairing((0, 1, 2), (0, 1, 2), (1, 0))


# --- componentes ---

def test_components_tables():
    assert meander_components_table(2) == {1: 2, 2: 2}
    assert meander_components_table(3) == {1: 8, 2: 12, 3: 5}
    assert meander_components_table(4)[1] == 42


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_refined_component_identity(n):
    assert components_by_cycles(n) == meander_components_table(n)


@pytest.mark.slow
def test_refined_component_identity_order_six():
    assert components_by_cycles(6) == meander_components_table(6, threads=2)


def test_components_of_a_system():
    ms = MeanderSystem.of((0, 1, 2), (1, 2, 0))
    assert ms.components() == 1
    assert MeanderSystem.of((0, 1), (0, 1)).components() == 2
    with pytest.raises(UsageError):
        MeanderSystem.of((2, 0, 1), (0, 1, 2))


def test_meander_cap():
    with pytest.raises(ResourceError):
        MeanderEnumerator().enumerate(settings.MAX_MEANDER_N + 1)
    with pytest.raises(UsageError):
        MeanderEnumerator().enumerate(3, "genus")


# --- irredutibilidade ---

def test_irreducible_counts():
    assert [count_irreducible(n) for n in (1, 2, 3)] == [1, 2, 8]


def test_concatenation_is_one_reducible():
    a = MeanderSystem.of((1, 0), (0, 1))
    b = MeanderSystem.of((0,), (0,))
    assert irreducibility(a) == "2-irreducible"
    assert irreducibility(concatenate(a, b)) == "1-reducible"


def test_irreducible_series():
    assert irreducible_series_check(4)
    assert not irreducible_series_check(3, [1, 1, 2, 9])


@pytest.mark.slow
def test_irreducible_series_order_six():
    assert irreducible_series_check(6)


# --- caso Δ_{-1} ---

@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_pattern_exclusion(n):
    assert dyck_pattern_exclusion(n)
    paths = {motzkin_path(pi) for pi in meander_pairings(cyclic_shift(n, -1))}
    assert len(paths) == motzkin(n)
    assert all(is_motzkin_path(p) for p in paths)


# --- permutações SIF ---

def test_sif_counts():
    assert [count_sif(n) for n in range(6)] == [1, 1, 1, 2, 7, 34]
    assert sif_series_check(5)
    assert not sif_series_check(3, [1, 1, 1, 3])


@pytest.mark.slow
def test_sif_series_order_seven():
    assert sif_series_check(7)


def test_connected_blocks():
    assert connected_blocks((0, 2, 1)) == [(0, 1), (1, 3)]
    assert is_connected_perm((2, 1, 0))
    assert not is_connected_perm((0, 2, 1))


def test_small_sif_decompositions():
    assert sif_blocks_intervals((1, 0)) == [(0, 1)]
    assert is_sif((1, 0))
    assert sif_blocks_intervals((2, 1, 0)) == [(0, 2), (1,)]
    assert sif_blocks_shifts((2, 1, 0)) == [(0, 2), (1,)]
    tree = sif_decompose((0, 2, 1))
    assert tree.blocks == [(0,), (1, 2)]
    assert sorted(tree.white_degrees()) == [1, 2]
    assert factorized_meander_set((0, 2, 1)) == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_decomposition_algorithms_agree(n):
    for sigma in permutations(range(n)):
        assert sif_blocks_intervals(sigma) == sif_blocks_shifts(sigma), sigma
        tree = sif_decompose(sigma)
        assert len(tree.blocks) + len(tree.regions) == n + 1


def test_identity_factorization():
    tree = sif_decompose(identity(4))
    assert tree.white_degrees() == [4]
    assert factorized_meander_set(identity(4)) == catalan(4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sif_factorization(n):
    for sigma in permutations(range(n)):
        assert sif_factorization_check(sigma), sigma


@pytest.mark.slow
def test_sif_factorization_order_six():
    assert all(sif_factorization_check(sigma) for sigma in permutations(range(6)))

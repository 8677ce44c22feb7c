import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from itertools import permutations
from random import Random

import pytest
from sympy.polys.domains import QQ

from algebra.series import gen
from colored.boundary import BubbleSubgraph, boundary_bubble, bubble_multiset, sd_expand
from colored.bubbles import (cycle_bubble, is_admissible, octahedron_bubble, quartic_bubble,
                             two_cyclic_bubble)
from colored.degree import cyclic_orders, degree_from_jackets, gurau_degree, jacket
from colored.gluings import (GluingEnumerator, TreeBubble, colored_faces, flip_two_bond, gluing_census,
                             gmax, gurau_bound, join_by_two_bond, max2cut_check, pairing_cycles,
                             quartic_map, quartic_model_check, quartic_scaling, quartic_union,
                             tree_critical_point, tree_series_K, two_bonds)
from colored.graph import (Bubble, C0, ColoredGraph, automorphism_count, canonical_form, format_graph,
                           parse_graph, random_colored_graph, two_vertex_graph)
from colored.melons import find_dipole, insert_dipole, is_melonic, random_melonic
from config.settings import settings
from meanders.systems import meander_set
from oracle.permutations import identity
from utils.errors import ResourceError, UsageError


@pytest.fixture(scope="module")
def two_octahedra():
    return gluing_census([(octahedron_bubble(), 2)])


# --- grafos e formato ---

def test_graph_validation():
    with pytest.raises(UsageError):
        ColoredGraph(((0, 1), (0, 0), (1, 0)))
    with pytest.raises(UsageError):
        Bubble(((0,),))
    G = two_vertex_graph(3)
    assert G.d == 3 and G.n == 1 and G.is_closed
    with pytest.raises(UsageError):
        G.sigma(4)


def test_text_format_round_trip():
    B = octahedron_bubble()
    G = B.close(gmax(B)[1][0])
    assert parse_graph(format_graph(G)) == G
    assert parse_graph(format_graph(B)) == B
    with pytest.raises(UsageError):
        parse_graph("3 2\n1 2\n")


def test_canonical_form_ignores_labels():
    G = random_colored_graph(3, 5, Random(7))
    H = G.relabel((3, 0, 4, 1, 2), (1, 4, 2, 0, 3))
    assert canonical_form(G) == canonical_form(H)


# --- grau de Gurau e jaquetas ---

@pytest.mark.parametrize("d,n,seed", [(2, 3, 1), (2, 5, 2), (3, 3, 3), (3, 4, 4), (3, 5, 5), (4, 3, 6)])
def test_degree_matches_jackets(d, n, seed):
    G = random_colored_graph(d, n, Random(seed))
    omega = gurau_degree(G)
    assert omega >= 0
    assert omega == degree_from_jackets(G)


def test_d2_degree_is_twice_the_genus():
    rng = Random(11)
    checked = 0
    while checked < 10:
        G = random_colored_graph(2, rng.randint(1, 6), rng)
        if not G.is_connected():
            continue
        assert gurau_degree(G) == jacket(G, (0, 1, 2)).two_genus
        checked += 1


def test_cyclic_orders_count():
    assert len(cyclic_orders(3)) == 3
    assert len(cyclic_orders(4)) == 12


@pytest.mark.parametrize("d", [3, 4])
def test_melonic_graphs_have_zero_degree(d):
    rng = Random(d)
    for n in range(1, 7):
        G = random_melonic(d, n, rng)
        assert G.n == n
        assert gurau_degree(G) == 0
        assert is_melonic(G)


def test_dipole_insertion_and_detection():
    G = insert_dipole(two_vertex_graph(3), 2, 0)
    assert G.n == 2
    assert find_dipole(G) is not None
    with pytest.raises(UsageError):
        insert_dipole(G, 5, 0)


def test_non_melonic_graph():
    B = octahedron_bubble()
    G = B.close(gmax(B)[1][0])
    assert gurau_degree(G) > 0
    assert not is_melonic(G)


# --- bolhas de bordo e Schwinger-Dyson ---

def test_cycle_self_contractions():
    terms = [t for t in sd_expand(cycle_bubble(3), []) if t.source[0] == "self"]
    assert [t.exponent for t in terms] == [1, 1, 0]
    p2 = canonical_form(cycle_bubble(2))
    assert canonical_form(terms[0].bubble) == p2
    assert canonical_form(terms[1].bubble) == p2
    assert bubble_multiset(terms[2].bubble) == {canonical_form(cycle_bubble(1)): 2}


def test_single_white_cycle():
    terms = sd_expand(cycle_bubble(1), [cycle_bubble(1)])
    assert [(t.exponent, t.source[0]) for t in terms] == [(2, "self"), (0, "bridge")]
    assert terms[0].bubble.n == 0
    assert canonical_form(terms[1].bubble) == canonical_form(cycle_bubble(1))


def test_boundary_independent_of_order():
    H = BubbleSubgraph(octahedron_bubble(), ((0, 1), (2, 3), (3, 0)))
    reference = boundary_bubble(H)
    for order in permutations(H.edges):
        assert boundary_bubble(H, order) == reference


def test_boundary_rejects_bad_edges():
    with pytest.raises(UsageError):
        BubbleSubgraph(octahedron_bubble(), ((0, 1), (0, 2)))
    H = BubbleSubgraph(octahedron_bubble(), ((0, 1),))
    with pytest.raises(UsageError):
        boundary_bubble(H, [(1, 0)])


def test_sd_rejects_mixed_dimensions():
    with pytest.raises(UsageError):
        sd_expand(cycle_bubble(2), [octahedron_bubble()])


# --- octaedro e colagens ---

def test_octahedron_bubble():
    B = octahedron_bubble()
    assert [B.bicolored_cycles(a, b) for a, b in ((1, 2), (1, 3), (2, 3))] == [2, 2, 2]
    value, maximizers = gmax(B)
    assert value == 8
    assert len(maximizers) == 3
    assert automorphism_count(B) == 4


def test_two_octahedra(two_octahedra):
    assert two_octahedra.c_max == 13
    assert two_octahedra.labeled == 144
    assert two_octahedra.rooted == 36


def test_maximal_gluings_have_the_two_cut_property(two_octahedra):
    for pi in two_octahedra.maximizers:
        G = two_octahedra.graph(pi)
        assert max2cut_check(G, range(4))
        assert max2cut_check(G, range(4, 8))


def test_four_bond_gluing_is_not_maximal(two_octahedra):
    pi = (4, 5, 6, 7, 0, 1, 2, 3)
    G = two_octahedra.graph(pi)
    assert not max2cut_check(G, range(4))
    assert pairing_cycles(pi, two_octahedra.union.perms) < two_octahedra.c_max


def test_gluing_cap():
    with pytest.raises(ResourceError):
        GluingEnumerator().enumerate([(cycle_bubble(1), settings.MAX_GMAX_VERTICES + 1)])


def test_flip_and_join_two_bond():
    B = octahedron_bubble()
    A = B.close(gmax(B)[1][0])
    D = two_vertex_graph(3)
    G = join_by_two_bond(A, D, 0, 0)
    assert G.is_connected()
    assert (0, A.n) in two_bonds(G)
    left, right = flip_two_bond(G, 0, A.n)
    assert canonical_form(left) == canonical_form(A)
    assert canonical_form(right) == canonical_form(D)
    assert C0(left) + C0(right) == C0(G) + 3


def test_flip_rejects_non_bonds():
    B = octahedron_bubble()
    G = B.close(gmax(B)[1][0])
    with pytest.raises(UsageError):
        flip_two_bond(G, 0, 0)


# --- série das árvores ---

def test_octahedron_tree_series():
    K = tree_series_K([TreeBubble.from_bubble("p", octahedron_bubble())], 3)
    p = gen(K.ring, "p")
    assert K.coeff(0) == K.ring.one
    assert K.coeff(1) == 3 * p
    assert K.coeff(2) == 36 * p ** 2
    assert tree_critical_point(3, 4) == QQ(9, 256)


def test_tree_critical_point_rejects_degenerate_input():
    with pytest.raises(UsageError):
        tree_critical_point(3, 1)


# --- bolhas 2-cíclicas e meandros ---

@pytest.mark.parametrize("n", [1, 2, 3])
def test_two_cyclic_bubbles_count_meander_systems(n):
    for sigma in permutations(range(n)):
        B = two_cyclic_bubble(identity(n), sigma)
        assert len(gmax(B)[1]) == meander_set(sigma), sigma


def test_two_cyclic_bubble_with_white_permutation():
    sw, sb = (0, 2, 1), (1, 2, 0)
    assert len(gmax(two_cyclic_bubble(sw, sb))[1]) == meander_set(sb, sw)
    with pytest.raises(UsageError):
        two_cyclic_bubble((1, 0), (0, 1))


# --- modelo quártico ---

@pytest.mark.parametrize("cset,d", [({1}, 3), ({1}, 4), ({1, 2}, 4), ({2}, 5), ({1, 3}, 5)])
def test_quartic_bubble(cset, d):
    B = quartic_bubble(cset, d)
    assert is_admissible(cset, d)
    assert gmax(B)[0] == 2 * d - len(cset)
    assert gmax(B)[0] - d == quartic_scaling(cset, d)
    assert quartic_scaling(cset, d) <= gurau_bound(cset, d)
    assert automorphism_count(B) == 2


def test_quartic_admissibility():
    assert not is_admissible({2, 3}, 3)
    assert not is_admissible({2, 3}, 4)
    with pytest.raises(UsageError):
        quartic_bubble({1, 2, 3}, 3)


def test_colored_faces_match_bicolored_cycles():
    sets, counts, d = [{1}, {2}], [1, 1], 3
    union, labels = quartic_union(sets, counts, d)
    for pi in permutations(range(union.n)):
        G = union.close(pi)
        if G.is_connected():
            assert C0(G) == colored_faces(quartic_map(G, labels), labels, d)


@pytest.mark.parametrize("sets,counts,d", [
    ([{1}], [1], 3),
    ([{1}], [2], 3),
    ([{1}], [3], 3),
    ([{1}, {2}], [1, 1], 3),
    ([{1, 2}], [2], 4),
    ([{1, 2}, {1, 3}], [1, 1], 4),
])
def test_quartic_model(sets, counts, d):
    report = quartic_model_check(sets, counts, d)
    assert report.c_max == report.expected
    assert report.agrees
    assert report.ok


@pytest.mark.slow
@pytest.mark.parametrize("sets,counts,d", [([{1}], [4], 3), ([{1, 2}], [4], 4)])
def test_quartic_model_four_bubbles(sets, counts, d):
    assert quartic_model_check(sets, counts, d).ok

import networkx as nx
import pytest

import config
from descent import LengthMismatchError, check_complement_automorphism, check_cut_closure, \
    check_descent_class_theorem, check_global_characterisation, check_lex_refines_weak_order, check_lsd_oracle, \
    check_nonlsd_ideal, check_psi_dual_section, check_psi_multiplicative, check_psi_retraction, \
    check_psi_witnesses, check_sections, complement, descent_class_subgraph, first_section_difference, hasse, \
    hasse_to_gml, is_lld, is_lsd, lld, lower_covers, lsd, lwo_leq, psi_retract, section_lld, section_lsd, \
    upper_covers
from freemod import Elem
from nsq import DescentSet, NsymmElem, desc_of_perm


def test_lsd_example():
    assert lsd(DescentSet.of({2, 3}, 5)) == (1, 4, 3, 2, 5)
    assert lsd(DescentSet.of({1, 2, 3}, 4)) == (4, 3, 2, 1)
    assert lsd(DescentSet.of(set(), 3)) == (1, 2, 3)


def test_lld_is_the_complemented_lsd():
    D = DescentSet.of({1}, 3)
    assert lld(D) == (3, 1, 2)
    assert desc_of_perm(lld(D)) == D
    assert is_lld((3, 1, 2))
    assert not is_lsd((3, 1, 2))


def test_complement_flips_descents():
    perm = (3, 2, 5, 7, 1, 4, 6)
    assert desc_of_perm(complement(perm)) == desc_of_perm(perm).complement()
    assert complement((1, 2, 3)) == (3, 2, 1)


def test_weak_order():
    assert lwo_leq((1, 2, 3), (3, 2, 1))
    assert not lwo_leq((3, 2, 1), (1, 2, 3))
    with pytest.raises(LengthMismatchError):
        lwo_leq((1,), (1, 2))
    assert lower_covers((2, 1)) == [(1, 2)]
    assert upper_covers((1, 2)) == [(2, 1)]


def test_hasse_graph_sizes():
    assert (hasse(2).number_of_nodes(), hasse(2).number_of_edges()) == (2, 1)
    assert hasse(4).number_of_nodes() == 24
    assert hasse(3).number_of_edges() == 6


def test_hasse_highlight_and_export():
    D = DescentSet.of({2, 3}, 5)
    graph = hasse(5, D)
    marked = [perm for perm, data in graph.nodes(data=True) if data['highlight']]
    assert (1, 4, 3, 2, 5) in marked
    assert nx.is_weakly_connected(descent_class_subgraph(graph, D))
    text = hasse_to_gml(hasse(2))
    assert 'label "[2,1]"' in text


def test_hasse_rejects_mismatched_highlight():
    with pytest.raises(LengthMismatchError):
        hasse(4, DescentSet.of({2, 3}, 5))
    with pytest.raises(ValueError):
        hasse(config.HASSE_MAX_N + 1)


def test_descent_class_theorem():
    assert check_descent_class_theorem(5).passed
    assert check_global_characterisation(5).passed
    assert check_lsd_oracle(6).passed
    assert check_lex_refines_weak_order(4).passed


def test_lsd_families():
    assert check_nonlsd_ideal(4).passed
    assert check_cut_closure(5, "lsd").passed
    assert check_cut_closure(5, "lld").passed
    assert check_psi_witnesses(4).passed


def test_psi():
    assert psi_retract((2, 1, 3)) == NsymmElem.basis_elem('R', (1, 2))
    assert psi_retract((3, 1, 2)) == NsymmElem('R', Elem.zero())
    assert check_psi_retraction(4).passed
    assert check_psi_multiplicative(3).passed


def test_sections():
    assert section_lsd((3,)) == (1, 2, 3)
    assert section_lsd((1, 2)) == (2, 1, 3)
    assert section_lld((1, 2)) == (3, 1, 2)
    assert first_section_difference(5) == (1, 2)
    assert check_sections(4, "lsd").passed
    assert check_sections(4, "lld").passed
    assert check_psi_dual_section(4).passed
    assert check_complement_automorphism(4).passed

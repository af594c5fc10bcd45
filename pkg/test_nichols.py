"""
Test Yetter-Drinfeld modules over D8, braidings, Nichols-algebra oracles,
Cartan matrices, skeletons and the triple pipeline
"""

import itertools
import sys

import pytest

from errors import DegreeTooHigh, NotAbelianSupport, NotASkeleton
from exactmath import RootOfUnity
from fixtures import (CARTAN_DISCREPANCY_PAIRS, DIAGONAL_TRIPLES, PAIR_DEFECT_WITNESSES,
                      SKELETON_TRIPLES)
from nichols import (PUBLISHED_MATRICES, PUBLISHED_SKELETONS, adjoint_power, braiding,
                     braiding_defect, cartan_data, cartan_matrix, classify_triple,
                     d8_module, diagonalize_braiding, dynkin_isomorphic,
                     is_braid_indecomposable, is_zero_in_nichols, matrix_to_json,
                     published_diagram, skeleton, symmetrize, symmetrizer_rank,
                     tensor_to_json)

MODULES = ['M1', 'M2', 'M3', 'M4', 'M5', 'M6']


def word(space, *labels):
    return {tuple(space.index_of(l) for l in labels): RootOfUnity.one()}


@pytest.mark.parametrize("name", MODULES)
def test_modules_are_yetter_drinfeld(name):
    M = d8_module(name)
    ok, witness = M.verify_yd()
    assert ok, witness
    assert M.dim == 2


def test_module_labels_and_supports():
    assert d8_module('M1').labels == ['1u1', '1u2']
    assert d8_module('M2').labels == ['1v', 'yv']
    assert d8_module('M4').labels == ['1w2', 'xw2']
    assert d8_module('M1').support == [2]
    assert d8_module('M5').support == [5, 7]
    with pytest.raises(KeyError):
        d8_module('M7')


def test_braid_equation_on_all_modules():
    space = braiding([d8_module(n) for n in MODULES])
    assert space.dim == 12


def test_central_module_action():
    space = braiding([d8_module('M1'), d8_module('M3')])
    u1, w1 = space.index_of('1u1'), space.index_of('1w1')
    # x^2 acts on M3 by -1 and y swaps u1, u2 with sign -1
    assert space.c(u1, w1) == ((w1, u1), RootOfUnity.of(1, 2))
    assert space.c(w1, u1) == ((space.index_of('1u2'), w1), RootOfUnity.of(1, 2))


@pytest.mark.parametrize("pair,witness", PAIR_DEFECT_WITNESSES)
def test_pair_defect_witnesses(pair, witness):
    space = braiding([d8_module(n) for n in pair])
    assert braiding_defect(space, *witness)


def test_indecomposability_of_pairs_and_triples():
    for pair, _ in PAIR_DEFECT_WITNESSES:
        ok, witnesses = is_braid_indecomposable([d8_module(n) for n in pair])
        assert ok, pair
        assert list(witnesses) == ['(0,1)']
    ok, witnesses = is_braid_indecomposable([d8_module(n) for n in ('M1', 'M3', 'M5')])
    assert ok
    assert set(witnesses) == {'(0,1)', '(0,2)', '(1,2)'}


def test_single_module_is_paired_with_itself():
    ok, witness = is_braid_indecomposable([d8_module('M4')])
    assert not ok
    assert witness == {'pair': [0, 1]}


def test_degree_two_symmetrizer():
    space = braiding([d8_module('M4')])
    assert is_zero_in_nichols(space, word(space, '1w2', '1w2'))
    assert is_zero_in_nichols(space, word(space, 'xw2', 'xw2'))
    assert not is_zero_in_nichols(space, word(space, '1w2', 'xw2'))
    tensors = [word(space, a, b) for a, b in itertools.product(space.labels, repeat=2)]
    assert symmetrizer_rank(space, tensors) == 1


def test_symmetrizer_on_m1_and_m2():
    space = braiding([d8_module('M1'), d8_module('M2')])
    assert is_zero_in_nichols(space, word(space, '1u1', '1u1'))
    assert is_zero_in_nichols(space, word(space, '1v', '1v'))
    image = symmetrize(space, word(space, '1u1', '1u2'))
    assert image
    assert tensor_to_json(space, image)[0]['word'][0] in ('1u1', '1u2')


def test_symmetrizer_degree_cap():
    space = braiding([d8_module('M2')])
    with pytest.raises(DegreeTooHigh):
        symmetrize(space, word(space, '1v', '1v', '1v', '1v', '1v'))
    with pytest.raises(DegreeTooHigh):
        adjoint_power(space, 0, 0, 4)


def test_adjoint_powers_of_m1_on_m3():
    space = braiding([d8_module('M1'), d8_module('M3')])
    first = adjoint_power(space, 0, 1, 1)
    assert first.nonzero
    assert first.rank == 2
    assert len(first.elements) == 4
    assert not adjoint_power(space, 0, 1, 2).nonzero


@pytest.mark.parametrize("names", [('M1', 'M3', 'M5'), ('M2', 'M3', 'M5')])
def test_cartan_matrices_of_skeleton_triples(names):
    matrix, certificates = cartan_data([d8_module(n) for n in names])
    assert matrix == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert certificates['(0,1)'][0] > 0
    assert certificates['(0,1)'][-1] == 0


def test_cartan_zero_pattern_is_symmetric():
    for a, b in itertools.combinations(MODULES, 2):
        matrix = cartan_matrix([d8_module(a), d8_module(b)], cap=2)
        assert (matrix[0][1] == 0) == (matrix[1][0] == 0), (a, b)


def test_skeleton_of_two_solid_triangle():
    modules = [d8_module(n) for n in ('M1', 'M3', 'M5')]
    sk = skeleton(modules)
    assert sk.signature() == PUBLISHED_SKELETONS['two-solid-triangle']
    assert [v['points'] for v in sk.vertices] == [1, 2, 2]
    assert sk.vertices[0]['label'] is None
    assert sk.vertices[1]['label'] == '1/2'
    styles = {tuple(e['pair']): e['style'] for e in sk.edges}
    assert styles == {('M1', 'M3'): 'solid', ('M1', 'M5'): 'solid', ('M3', 'M5'): 'dashed'}
    assert all(e['oriented'] is None for e in sk.edges)


def test_skeleton_rejects_non_simply_laced_pair():
    modules = [d8_module('M3'), d8_module('M5')]
    with pytest.raises(NotASkeleton):
        skeleton(modules, cartan=[[2, -2], [-2, 2]])


@pytest.mark.parametrize("name", sorted(PUBLISHED_MATRICES))
def test_published_braiding_matrices(name):
    entry = PUBLISHED_MATRICES[name]
    matrix, eigen, diagram = diagonalize_braiding([d8_module(n) for n in entry['modules']])
    assert [v.label for v in eigen] == entry['labels']
    assert matrix_to_json(matrix) == entry['matrix']
    assert dynkin_isomorphic(diagram, published_diagram(name))[0]


@pytest.mark.parametrize("name", sorted(PUBLISHED_MATRICES))
def test_published_matrices_are_stored_canonically(name):
    for row in PUBLISHED_MATRICES[name]['matrix']:
        for q in row:
            assert RootOfUnity.from_json(q).to_json() == q


def test_eigenvectors_of_m1_m2():
    space = braiding([d8_module('M1'), d8_module('M2')])
    _, eigen, _ = diagonalize_braiding([d8_module('M1'), d8_module('M2')])
    assert eigen[0].to_json(space) == {'label': 't1', 'coeffs': {'1u1': '0/1', '1u2': '1/4'}}


def test_m1_m3_m4_diagram_is_two_triangles():
    diagram = published_diagram('m1-m3-m4-braiding-matrix')
    assert len(diagram.edges) == 6
    assert all(q == RootOfUnity.of(1, 2) for q in diagram.edges.values())
    assert all(q == RootOfUnity.of(1, 2) for q in diagram.vertices)


def test_m1_m5_m6_matches_m1_m3_m4():
    _, _, diagram = diagonalize_braiding([d8_module(n) for n in ('M1', 'M5', 'M6')])
    ok, perm = dynkin_isomorphic(diagram, published_diagram('m1-m3-m4-braiding-matrix'))
    assert ok
    assert sorted(perm) == list(range(6))


def test_nonabelian_support_has_no_diagonal_form():
    with pytest.raises(NotAbelianSupport):
        diagonalize_braiding([d8_module('M2'), d8_module('M3')])


@pytest.mark.parametrize("triple", DIAGONAL_TRIPLES)
def test_diagonal_triples(triple):
    report = classify_triple(*triple)
    assert report['route'] == 'diagonal'
    assert report['braid_indecomposable']
    assert report['matched'] in PUBLISHED_MATRICES
    assert report['verdict'] == 'infinite-dimensional'


@pytest.mark.parametrize("figure,triple",
                         [(f, t) for f, triples in SKELETON_TRIPLES.items() for t in triples])
def test_skeleton_triples(figure, triple):
    report = classify_triple(*triple)
    names = report['triple']
    bad = [p for p in CARTAN_DISCREPANCY_PAIRS if set(p) <= set(names)]
    for i, j in itertools.permutations(range(3), 2):
        pair = (names[min(i, j)], names[max(i, j)])
        assert report['cartan'][i][j] == (-2 if pair in bad else -1), (pair, report['cartan'])
    if bad:
        # the computed matrix disagrees with the drawn figure: flagged, never matched
        assert report['route'] == 'not-a-skeleton'
        assert [tuple(d['pair']) for d in report['discrepancy']] == bad
        assert [tuple(v['pair']) for v in report['skeleton']['violations']] == bad
        assert report['matched'] is None
        assert report['verdict'] == 'undetermined'
    else:
        assert report['route'] == 'skeleton'
        assert report['discrepancy'] == []
        assert report['matched'] == figure
        assert report['verdict'] == 'infinite-dimensional'


@pytest.mark.parametrize("pair", CARTAN_DISCREPANCY_PAIRS)
def test_discrepancy_pairs_have_entry_minus_two(pair):
    modules = [d8_module(n) for n in pair]
    matrix, certificates = cartan_data(modules, cap=3)
    assert matrix == [[2, -2], [-2, 2]]
    assert certificates['(0,1)'] == certificates['(1,0)'] == [4, 2, 0]


def test_skeleton_lists_violations_when_not_strict():
    modules = [d8_module('M3'), d8_module('M6')]
    sk = skeleton(modules, cartan=[[2, -2], [-2, 2]], strict=False)
    assert not sk.is_skeleton
    assert sk.violations == [{'pair': ['M3', 'M6'], 'a_ij': -2, 'a_ji': -2}]
    assert sk.edges[0]['count'] == 4
    assert sk.edges[0]['oriented'] is None
    assert sk.to_json()['violations'] == sk.violations


def test_triple_routes_cover_all_triples():
    covered = {tuple(t) for t in DIAGONAL_TRIPLES}
    covered |= {tuple(t) for triples in SKELETON_TRIPLES.values() for t in triples}
    assert covered == set(itertools.combinations(range(1, 7), 3))


def test_pair_route_uses_m1_m2():
    report = classify_triple(3, 2, 1)
    assert report['triple'] == ['M1', 'M2', 'M3']
    assert report['diagonal_modules'] == ['M1', 'M2']
    assert report['matched'] == 'm1-m2-braiding-matrix'


if __name__ == "__main__":
    print("\n" + "="*60)
    print("NICHOLS ALGEBRA TESTS")
    print("="*60 + "\n")
    sys.exit(pytest.main([__file__, "-v"]))

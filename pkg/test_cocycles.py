"""
Test the cocycle family, derived 2-cochains, inflation and the coboundary decision
"""

import sys

import hypothesis as hyp
import numpy as np
import pytest
from hypothesis import strategies as st

from cocycles import (CocycleParams, Cochain3, coboundary, enumerate_params, eval_omega,
                      f3_pullback, gamma, inflate, is_abelian, is_coboundary, omega_g,
                      omega_table, theta, verify_3cocycle, verify_coboundary_witness)
from errors import NotAbelian, NotGenerating, NotHomomorphism, NotSurjective, OutOfRange
from exactmath import RootOfUnity
from groups import build_abelian, cyclic, dihedral8


def random_normalized_2cochain(group, order, seed):
    rng = np.random.default_rng(seed)
    f = rng.integers(0, order, size=(group.order, group.order))
    f[group.identity, :] = 0
    f[:, group.identity] = 0
    return f


def z2cubed_a123():
    return CocycleParams(build_abelian([2, 2, 2]), (0, 0, 0), {}, {(1, 2, 3): 1})


def test_parameter_space_sizes():
    assert len(list(enumerate_params(build_abelian([2, 2, 2])))) == 128
    assert len(list(enumerate_params(build_abelian([2, 4])))) == 16
    assert len(list(enumerate_params(cyclic(6)))) == 6


@pytest.mark.parametrize("factors", [[2, 2, 2], [2, 4]])
def test_every_parameter_vector_is_a_cocycle(factors):
    for params in enumerate_params(build_abelian(factors)):
        ok, witness = verify_3cocycle(Cochain3.from_params(params))
        assert ok, f"{params.to_json()} fails {witness}"


@pytest.mark.parametrize("m", range(2, 9))
def test_cyclic_family_is_a_cocycle(m):
    for a in range(m):
        assert verify_3cocycle(Cochain3.from_params(CocycleParams(cyclic(m), (a,))))[0]


def test_table_matches_closed_form():
    for params in [z2cubed_a123(), CocycleParams(build_abelian([2, 4]), (1, 3), {(1, 2): 1})]:
        c = Cochain3.from_params(params)
        G = params.group
        for u in G.elements():
            for v in G.elements():
                for w in G.elements():
                    assert c.value(u, v, w) == eval_omega(params, u, v, w)


def test_omega_table_order():
    table, N = omega_table(CocycleParams(build_abelian([2, 4]), (1, 1)))
    assert N == 4
    assert table.shape == (8, 8, 8)


def test_abelian_iff_no_triple_parameter():
    assert not is_abelian(z2cubed_a123())
    assert is_abelian(CocycleParams(build_abelian([2, 2, 2]), (1, 0, 1), {(1, 3): 1}))


def test_parameter_validation():
    G = build_abelian([2, 4])
    with pytest.raises(OutOfRange):
        CocycleParams(G, (2, 0))
    with pytest.raises(OutOfRange):
        CocycleParams(G, (0, 0), {(1, 2): 2})
    with pytest.raises(OutOfRange):
        CocycleParams(G, (0,))
    with pytest.raises(OutOfRange):
        CocycleParams.from_sequence(G, [0, 0])


def test_params_json_and_sequence():
    params = CocycleParams(build_abelian([2, 2, 2]), (1, 0, 1), {(2, 3): 1}, {(1, 2, 3): 1})
    assert CocycleParams.from_json(params.to_json()) == params
    assert params.to_sequence() == [1, 0, 1, 0, 0, 1, 1]
    assert CocycleParams.from_sequence(params.group, params.to_sequence()) == params
    assert params.to_json()['a3'] == {'(1,2,3)': 1}


def test_normalization_failure_is_reported():
    G = cyclic(2)
    table = np.zeros((2, 2, 2), dtype=np.int64)
    table[0, 1, 1] = 1
    ok, witness = verify_3cocycle(Cochain3(G, 2, table=table))
    assert not ok
    assert witness == ('normalization', (0, 1, 1))


def test_perturbed_cocycle_fails():
    c = Cochain3.from_params(CocycleParams(cyclic(4), (1,)))
    broken = c.with_value(1, 1, 1, c.value(1, 1, 1) * RootOfUnity.of(1, 8))
    ok, witness = verify_3cocycle(broken)
    assert not ok
    assert witness[0] == 'cocycle'


def test_inverse_cochain():
    c = Cochain3.from_params(CocycleParams(cyclic(4), (3,)))
    inv = c.inverse()
    assert all((c.value(u, v, w) * inv.value(u, v, w)).is_one()
               for u in range(4) for v in range(4) for w in range(4))


@hyp.settings(max_examples=20, deadline=None)
@hyp.given(st.sampled_from([[2, 2], [2, 4], [3, 3], [6]]), st.integers(0, 10_000))
def test_coboundary_of_normalized_2cochain_is_a_cocycle(factors, seed):
    G = build_abelian(factors)
    order = G.factors[-1]
    c = coboundary(G, random_normalized_2cochain(G, order, seed), order)
    assert verify_3cocycle(c)[0]


@pytest.mark.parametrize("factors", [[2, 4], [3, 3]])
def test_coboundaries_pass_the_coboundary_decision(factors):
    G = build_abelian(factors)
    order = G.factors[-1]
    generators = [G.generator(l) for l in range(G.rank)]
    for seed in range(50):
        c = coboundary(G, random_normalized_2cochain(G, order, seed), order)
        psi = f3_pullback(c, generators)
        ok, witness = is_coboundary(psi)
        assert ok, f"seed {seed}: {psi.to_json()}"
        assert verify_coboundary_witness(psi, witness)


@pytest.mark.parametrize("m", range(2, 13))
def test_cyclic_family_is_not_a_coboundary(m):
    for a in range(1, m):
        c = Cochain3.from_params(CocycleParams(cyclic(m), (a,)))
        psi = f3_pullback(c, [1])
        assert psi.lll[(1, 1, 1)] == RootOfUnity.of(a, m)
        assert is_coboundary(psi) == (False, None)


def test_triple_parameter_is_not_a_coboundary():
    params = z2cubed_a123()
    G = params.group
    psi = f3_pullback(Cochain3.from_params(params), [G.generator(l) for l in range(3)])
    assert psi.rst[(1, 2, 3)] == RootOfUnity.of(1, 2)
    assert not is_coboundary(psi)[0]


def test_trivial_cocycle_is_a_coboundary():
    G = build_abelian([2, 4])
    psi = f3_pullback(Cochain3.trivial(G), [G.generator(0), G.generator(1)])
    ok, witness = is_coboundary(psi)
    assert ok
    assert witness[(1, 2)].is_one()


def test_f3_pullback_rejects_bad_generators():
    G = build_abelian([2, 4])
    c = Cochain3.trivial(G)
    with pytest.raises(NotGenerating):
        f3_pullback(c, [G.generator(0)])
    with pytest.raises(NotGenerating):
        f3_pullback(c, [G.generator(0), G.generator(1)], orders=[2, 2])
    with pytest.raises(NotAbelian):
        f3_pullback(Cochain3.trivial(dihedral8()), [1, 4])


def test_theta_and_gamma_agree_with_omega_g_on_abelian_groups():
    c = Cochain3.from_params(CocycleParams(build_abelian([2, 4]), (1, 2), {(1, 2): 1}))
    for g in range(8):
        for x in range(8):
            for y in range(8):
                assert theta(c, g, x, y) == omega_g(c, g, x, y)
                assert gamma(c, g, x, y) == omega_g(c, g, x, y)


def test_omega_g_needs_abelian_group():
    with pytest.raises(NotAbelian):
        omega_g(Cochain3.trivial(dihedral8()), 1, 1, 1)


def test_inflation():
    G, E = cyclic(2), build_abelian([2, 4])
    c = Cochain3.from_params(CocycleParams(G, (1,)))
    pi = [E.vector(u)[0] for u in E.elements()]
    inflated = inflate(c, E, pi)
    assert verify_3cocycle(inflated)[0]
    u, v = E.index((1, 0)), E.index((1, 3))
    assert inflated.value(u, u, v) == c.value(1, 1, 1)

    with pytest.raises(NotSurjective):
        inflate(c, E, [0] * E.order)
    with pytest.raises(NotHomomorphism):
        inflate(c, E, [1] + [0] * (E.order - 1))


if __name__ == "__main__":
    print("\n" + "="*60)
    print("COCYCLE TESTS")
    print("="*60 + "\n")
    sys.exit(pytest.main([__file__, "-v"]))

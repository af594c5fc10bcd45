"""
Test the twisted quantum double: quasi-Hopf axioms, commutativity and group-likes
"""

import sys
from math import gcd

import pytest

from cocycles import CocycleParams, Cochain3, enumerate_params, is_abelian
from exactmath import RootOfUnity, scalars_equal
from groups import build_abelian, cyclic, dihedral8, invariant_factors_of
from tqd import (TqdAlgebra, TqdElement, beta_extension_cocycle, beta_from_tau,
                 commutativity_witness, cyclic_algebra, grouplike, grouplike_group,
                 is_commutative, tqd_antipode, tqd_comul, tqd_mul, verify_extension,
                 verify_grouplike, verify_quasi_hopf, verify_relations)


class PerturbedAlgebra(TqdAlgebra):
    """theta_g(g, g) multiplied by i for the generator g of Z_4"""

    def theta(self, g, x, y):
        value = super().theta(g, x, y)
        if (g, x, y) == (1, 1, 1):
            return value * RootOfUnity.of(1, 4)
        return value


def failing(report):
    return [a['axiom'] for a in report['axioms'] if a['status'] != 'pass']


@pytest.mark.parametrize("m,a", [(2, 0), (2, 1), (4, 0), (4, 1), (4, 2), (4, 3)])
def test_cyclic_doubles_are_quasi_hopf(m, a):
    report = verify_quasi_hopf(cyclic_algebra(m, a), full=True)
    assert report['mode'] == 'full'
    assert report['passed'], failing(report)


def test_z2cubed_triple_cocycle_double_is_quasi_hopf():
    params = CocycleParams(build_abelian([2, 2, 2]), (0, 0, 0), {}, {(1, 2, 3): 1})
    report = verify_quasi_hopf(TqdAlgebra.from_params(params), full=True)
    assert report['passed'], failing(report)


def test_untwisted_d8_double_is_quasi_hopf():
    D = dihedral8()
    report = verify_quasi_hopf(TqdAlgebra(D, Cochain3.trivial(D)), full=True)
    assert report['passed'], failing(report)


def test_sampled_mode():
    report = verify_quasi_hopf(cyclic_algebra(6, 1), full=False, seed=7, sample_size=50)
    assert report['mode'] == 'sampled'
    assert report['passed'], failing(report)


def test_perturbed_theta_breaks_associativity():
    A = PerturbedAlgebra.from_params(CocycleParams(cyclic(4), (1,)))
    report = verify_quasi_hopf(A, full=True)
    assert not report['passed']
    assert 'associativity' in failing(report)
    entry = next(a for a in report['axioms'] if a['axiom'] == 'associativity')
    assert entry['witness'] is not None


def test_unit_counit_and_antipode_basics():
    A = cyclic_algebra(4, 1)
    unit = A.unit()
    assert scalars_equal(A.counit(unit), 1)
    assert tqd_antipode(A, unit) == unit
    b = TqdElement.basis(1, 2)
    assert tqd_mul(A, unit, b) == b
    assert len(tqd_comul(A, (1, 2))) == 4
    assert A.counit(TqdElement.basis(0, 3)) == 1
    assert A.counit(b) == 0


def test_beta_of_cyclic_double():
    A = cyclic_algebra(4, 1)
    beta = A.beta()
    # omega(g, g^-1, g) = zeta_4^g away from the identity
    for g in range(1, 4):
        assert beta.terms[(g, 0)] == RootOfUnity.of(g, 4)


@pytest.mark.parametrize("factors", [[2, 2, 2], [2, 4]])
def test_commutative_iff_abelian_cocycle(factors):
    for params in enumerate_params(build_abelian(factors)):
        A = TqdAlgebra.from_params(params)
        assert is_commutative(A) == is_abelian(params), params.to_json()


def test_nonabelian_group_gives_noncommutative_double():
    D = dihedral8()
    A = TqdAlgebra(D, Cochain3.trivial(D))
    assert not is_commutative(A)
    b1, b2 = commutativity_witness(A)
    assert A.mul_basis(b1, b2) != A.mul_basis(b2, b1)
    assert commutativity_witness(cyclic_algebra(3, 1)) is None


def test_grouplikes_are_grouplike():
    A = cyclic_algebra(4, 1)
    for c in range(4):
        for k in range(4):
            assert verify_grouplike(A, grouplike(A, c, k))
    assert not verify_grouplike(A, TqdElement.basis(0, 0))


@pytest.mark.parametrize("m", range(2, 11))
def test_grouplike_group_structure(m):
    for a in range(1, m):
        GG = grouplike_group(cyclic_algebra(m, a))
        d = gcd(2 * a, m)
        expected = sorted(f for f in (d, m * m // d) if f > 1)
        assert GG.table.order == m * m
        assert GG.table.is_abelian()
        assert invariant_factors_of(GG.table) == expected, (m, a)
        assert all(verify_relations(GG).values()), (m, a)
        assert verify_extension(GG)


def test_grouplike_labels_and_kernel():
    GG = grouplike_group(cyclic_algebra(3, 1))
    assert GG.s == 3
    assert GG.t == 1
    assert GG.label(GG.index(2, 1)) == "sigma(chi^2, g^1)"
    assert GG.kernel() == [0, 3, 6]


@pytest.mark.parametrize("m,a", [(4, 1), (6, 2), (5, 3)])
def test_extension_cocycle_matches_tau(m, a):
    A = cyclic_algebra(m, a)
    for x in range(m):
        for y in range(m):
            chi = beta_extension_cocycle(A, x, y)
            assert [chi.value(g) for g in range(m)] == beta_from_tau(A, x, y)


if __name__ == "__main__":
    print("\n" + "="*60)
    print("QUANTUM DOUBLE TESTS")
    print("="*60 + "\n")
    sys.exit(pytest.main([__file__, "-v"]))

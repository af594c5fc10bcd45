"""
Test the genuineness criteria and the explicit group-like oracle
"""

import sys
from math import gcd

import hypothesis as hyp
import pytest
from hypothesis import strategies as st

from cocycles import PsiValues, verify_coboundary_witness
from errors import OutOfRange
from exactmath import RootOfUnity
from genuine import (decide_explicit, decide_gcd, decide_valuation, genuineness_report,
                     sweep, valuation2)


@st.composite
def cyclic_pairs(draw, max_m=64):
    m = draw(st.integers(2, max_m))
    a = draw(st.integers(1, m - 1))
    return m, a


def test_known_verdicts():
    assert decide_gcd(2, 1)
    assert not decide_gcd(3, 1)
    assert decide_gcd(4, 2)
    assert not decide_gcd(6, 2)
    assert decide_valuation(8, 4)
    assert not decide_valuation(12, 4)


def test_range_checks():
    for m, a in [(4, 0), (4, 4), (1, 1), (5, -1)]:
        with pytest.raises(OutOfRange):
            decide_gcd(m, a)
        with pytest.raises(OutOfRange):
            decide_valuation(m, a)
    with pytest.raises(OutOfRange):
        decide_explicit(13, 1)


def test_valuation2():
    assert valuation2(1) == 0
    assert valuation2(12) == 2
    assert valuation2(64) == 6


def test_criteria_agree_up_to_64():
    for m in range(2, 65):
        for a in range(1, m):
            assert decide_gcd(m, a) == decide_valuation(m, a), (m, a)


@hyp.given(cyclic_pairs())
def test_odd_order_is_never_genuine(pair):
    m, a = pair
    hyp.assume(m % 2 == 1)
    assert not decide_gcd(m, a)


@hyp.given(cyclic_pairs())
def test_odd_parameter_on_even_order_is_genuine(pair):
    m, a = pair
    hyp.assume(m % 2 == 0 and a % 2 == 1)
    assert decide_gcd(m, a)


def test_explicit_oracle_small_cases():
    genuine, trace = decide_explicit(2, 1)
    assert genuine
    assert trace['gamma_type'] == [2, 2]
    assert trace['coboundary_witness'] is None

    genuine, trace = decide_explicit(3, 1)
    assert not genuine
    assert trace['u'] is None
    assert trace['coboundary_witness'] is not None

    genuine, trace = decide_explicit(4, 2)
    assert genuine
    assert trace['gamma_type'] == [4, 4]


def test_explicit_complement_choice():
    genuine, trace = decide_explicit(6, 2)
    assert not genuine
    assert trace['b'] == 3
    assert trace['constraints_hold']
    assert trace['gamma_type'] == [2, 18]


@pytest.mark.parametrize("m", range(2, 13))
def test_explicit_oracle_matches_gcd(m):
    for a in range(1, m):
        assert decide_explicit(m, a)[0] == decide_gcd(m, a), (m, a)


ALL_PAIRS_UP_TO_12 = [(m, a) for m in range(2, 13) for a in range(1, m)]


@pytest.mark.parametrize("m,a", ALL_PAIRS_UP_TO_12)
def test_psi_value_on_t(m, a):
    _, trace = decide_explicit(m, a)
    psi = PsiValues.from_json(trace['psi'])
    # (zeta_m^-a)^(m / (2a, m))
    assert psi.lll[(1, 1, 1)] == RootOfUnity.of(-a * (m // gcd(2 * a, m)), m)


@pytest.mark.parametrize("m,a", [(m, a) for m, a in ALL_PAIRS_UP_TO_12 if not decide_gcd(m, a)])
def test_closed_form_coboundary_witness(m, a):
    _, trace = decide_explicit(m, a)
    psi = PsiValues.from_json(trace['psi'])
    if trace['b'] is None:
        assert verify_coboundary_witness(psi, {})
        return
    # g_12 = zeta_m^(ab/m)
    witness = {(1, 2): RootOfUnity.of(a * trace['b'], m * m)}
    assert verify_coboundary_witness(psi, witness), (m, a, trace['b'])


def test_report():
    report = genuineness_report(4, 2, explicit=True)
    assert report.genuine
    assert report.agree
    assert report.explicit_oracle is True
    data = report.to_json()
    assert data['gamma_type'] == [4, 4]
    assert set(data['generator_choice']) == {'t', 'u', 'b'}

    quick = genuineness_report(9, 3)
    assert quick.explicit_oracle == "skipped"
    assert not quick.genuine
    assert quick.agree


def test_sweep_frame():
    df = sweep(range(2, 7))
    assert len(df) == 1 + 2 + 3 + 4 + 5
    assert list(df[['m', 'a']].iloc[0]) == [2, 1]
    assert df['agree'].all()
    assert df.loc[(df['m'] == 6) & (df['a'] == 3), 'genuine'].item()
    assert sweep([]).empty


def test_sweep_with_workers_and_oracle():
    df = sweep([4, 6], explicit=True, workers=2)
    assert len(df) == 3 + 5
    assert df['agree'].all()
    assert (df['explicit_oracle'] == df['gcd_criterion']).all()


if __name__ == "__main__":
    print("\n" + "="*60)
    print("GENUINENESS TESTS")
    print("="*60 + "\n")
    sys.exit(pytest.main([__file__, "-v"]))

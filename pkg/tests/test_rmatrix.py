"""Casimir tests: truncated R-matrix, quantum trace, closed forms,
centrality, eigenvalues."""

from fractions import Fraction

import pytest

from qlg2.linalg import meq, mscale, meye, miszero, mmul
from qlg2.scalar import BR2, ONE, Q_SC, ZERO, evaluate, laurent_q, q_power
from qlg2.weights import Weight
from qlg2.modules import FUND
from qlg2.pbw import K, normal_form, root_E, root_F, star
from qlg2.rmatrix import (
    TruncatedRMatrix, casimir_eigenvalue, casimir_explicit,
    casimir_quantum_parts, casimir_right_form, centrality_residuals,
    factor_coefficient, quantum_trace_pairing,
)

Q = Q_SC


def _qp(n):
    return q_power(n)


def test_factor_coefficients():
    # single-step coefficients: -(q_beta - q_beta^-1)
    assert factor_coefficient(1, 1) == -Q
    assert factor_coefficient(3, 1) == -Q
    assert factor_coefficient(2, 1) == -(Q * BR2)
    assert factor_coefficient(4, 1) == -(Q * BR2)
    assert factor_coefficient(1, 0) == ONE
    # products over disjoint factors
    assert factor_coefficient(1, 1) * factor_coefficient(3, 1) == Q * Q
    assert factor_coefficient(1, 1) * factor_coefficient(4, 1) == Q * Q * BR2


def test_truncation_is_exact():
    R = TruncatedRMatrix.build()
    assert all(R.truncation_checks.values())
    assert len(R.truncation_checks) == 4


def test_intertwiner_property():
    R = TruncatedRMatrix.build()
    for tok, m in R.intertwiner_residuals().items():
        assert miszero(m), tok


def test_casimir_equals_explicit_form():
    C = quantum_trace_pairing()
    assert C == casimir_explicit()


def test_casimir_equals_right_form():
    C = quantum_trace_pairing()
    assert C == casimir_right_form()


def test_quantum_part_rewriting():
    direct, rewritten = casimir_quantum_parts()
    assert direct == rewritten


def test_rel_rewrite_identities():
    E = {j: root_E(j) for j in (1, 2, 3, 4)}
    Es = {j: star(root_E(j)) for j in (1, 2, 3, 4)}
    lhs = star(E[3] * E[1]) * E[2]
    rhs = _qp(2) * (Es[3] * E[2] * Es[1]) + _qp(2) * (Es[3] * E[3]) - BR2 * (Es[2] * E[2])
    assert lhs == rhs
    lhs = star(E[4] * E[1]) * E[3]
    rhs = _qp(2) * (Es[4] * E[3] * Es[1]) + BR2 * _qp(2) * (Es[4] * E[4]) \
        - _qp(2) * (Es[3] * E[3])
    assert lhs == rhs
    lhs = star(E[3] * E[1]) * E[3] * E[1]
    rhs = Es[3] * E[3] * Es[1] * E[1] + BR2 * (Es[3] * E[4] * E[1] - Es[2] * E[3] * E[1])
    assert lhs == rhs
    lhs = star(E[4] * E[1]) * E[4] * E[1]
    rhs = Es[4] * E[4] * Es[1] * E[1] - _qp(2) * (Es[3] * E[4] * E[1])
    assert lhs == rhs


def test_centrality():
    C = quantum_trace_pairing()
    for name, r in centrality_residuals(C).items():
        assert r.is_zero, name


def test_radical_bidegree_balanced():
    # no words with one-sided radical content survive the trace pairing
    C = quantum_trace_pairing()
    for (fexp, _lam, eexp) in C.terms:
        assert sum(fexp[:3]) == sum(eexp[1:]) <= 1


def test_casimir_scalar_on_fundamental():
    C = quantum_trace_pairing()
    c = casimir_eigenvalue((1, 0))
    assert meq(FUND.rep(C), mscale(c, meye(4, ONE, ZERO)))


def test_inner_product_values_of_proof():
    # (F_b3 F_b1 v_1, F_b2 v_1) = q^-1 with the orthonormal basis
    m31 = mmul(FUND.root_F(3), FUND.root_F(1), ZERO)
    m2 = FUND.root_F(2)
    val = sum((m31[i][0] * m2[i][0] for i in range(4)), ZERO)
    assert val == _qp(-1)
    # (F_b4 F_b1 v_1, F_b3 v_1) = q^-3
    m41 = mmul(FUND.root_F(4), FUND.root_F(1), ZERO)
    m3 = FUND.root_F(3)
    val = sum((m41[i][0] * m3[i][0] for i in range(4)), ZERO)
    assert val == _qp(-3)
    # (F_b1 v_1, F_b1 v_1) = q^-1,  (F_b2 v_1, F_b2 v_1) = q^-2
    f1 = FUND.root_F(1)
    assert sum((f1[i][0] * f1[i][0] for i in range(4)), ZERO) == _qp(-1)
    f2 = FUND.root_F(2)
    assert sum((f2[i][0] * f2[i][0] for i in range(4)), ZERO) == _qp(-2)


def test_eigenvalue_closed_forms():
    # oracle: pairings from the Gram matrix [[1,1],[1,2]] computed directly
    gram = ((1, 1), (1, 2))

    def pair(a, b):
        return sum(a[i] * gram[i][j] * b[j] for i in range(2) for j in range(2))

    lam_v = ((1, 0), (-1, 1), (1, -1), (-1, 0))
    for target in ((0, 0), (1, 0), (0, 1), (2, 3)):
        shifted = (target[0] + 1, target[1] + 1)
        want = sum((laurent_q({-2 * pair(w, shifted): 1}) for w in lam_v),
                   ZERO) / (Q * Q)
        assert casimir_eigenvalue(target) == want


def test_eigenvalue_examples():
    c0 = (laurent_q({-4: 1, -2: 1, 2: 1, 4: 1})) / (Q * Q)
    assert casimir_eigenvalue((0, 0)) == c0
    c1 = (laurent_q({-6: 1, -2: 1, 2: 1, 6: 1})) / (Q * Q)
    assert casimir_eigenvalue((1, 0)) == c1


def test_eigenvalue_monotone_numeric():
    v0 = Fraction(2, 5)
    vals = [evaluate(casimir_eigenvalue((n, 0)), v0) for n in range(6)]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert all(v > 0 for v in vals)

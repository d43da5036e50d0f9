"""Casimir element from the truncated R-matrix.

The R-matrix lives in a completion of the tensor square, so it is never
materialized abstractly: only (id (x) rho)(R) is computed, with the second
leg in the 4-dimensional fundamental module, where the expansion of each
rank-one quasi-R factor truncates exactly because the represented negative
root vectors square to zero.

Writing kappa^- for the Cartan correction acting as q^{-(mu, nu)} on a pair
of weight vectors, the represented R-matrix is the 4x4 matrix over the
algebra

    A = (id (x) rho)(R~[4] R~[3] R~[2] R~[1]) . diag(K_{lambda_nu}^{-1}),

with the rank-one factors

    R~[j] = sum_r (-1)^r q_j^{-r(r-1)/2} (q_j - q_j^{-1})^r / [r]_{q_j}!
            E_{beta_j}^r (x) rho(F_{beta_j})^r,

q_j being q on the short roots beta_1, beta_3 and q^2 on the long roots
beta_2, beta_4.  Pairing the flipped-star square against the quantum trace
and rescaling by (q - q^{-1})^-2 yields the central element playing the
role of the quadratic Casimir; its explicit PBW form and the equivalent
form with all Levi letters moved to the right are provided for comparison,
together with the eigenvalue formula

    c_L = sum_j q^{-2 (lambda_j, L + rho)} / (q - q^{-1})^2.
"""

from __future__ import annotations

from .linalg import madd, meye, miszero, mmul, msub, mzeros
from .scalar import BR2, ONE, Q_SC, ZERO, q_number, q_power
from .weights import LAMBDA_V, RHO, Weight
from .pbw import AE_ONE, AE_ZERO, K, root_E, star
from .modules import FUND

_Q = Q_SC


def _qp(n):
    return q_power(n)


# root lengths along w0 = s1 s2 s1 s2: bases of the rank-one sl2 factors
_ROOT_BASE = {1: 1, 2: 2, 3: 1, 4: 2}


def factor_coefficient(j, r):
    """Coefficient of E^r (x) F^r in the rank-one quasi-R factor at beta_j."""
    d = _ROOT_BASE[j]
    qd = _qp(d)
    br = ONE
    for k in range(2, r + 1):
        br = br * q_number(k, base=d)
    return ((-1) ** r) * _qp(-d * (r * (r - 1) // 2)) * (qd - _qp(-d)) ** r / br


def _amat_zero():
    return [[AE_ZERO for _ in range(4)] for _ in range(4)]


def _amat_eye():
    m = _amat_zero()
    for i in range(4):
        m[i][i] = AE_ONE
    return m


def _amat_mul(a, b):
    out = _amat_zero()
    for i in range(4):
        for t in range(4):
            x = a[i][t]
            if x.is_zero:
                continue
            for j in range(4):
                y = b[t][j]
                if y.is_zero:
                    continue
                out[i][j] = out[i][j] + x * y
    return out


class TruncatedRMatrix:
    """(id (x) rho)(R) as a 4x4 matrix of PBW elements."""

    def __init__(self, mat, truncation_checks):
        self.mat = mat
        self.truncation_checks = truncation_checks

    @classmethod
    def build(cls, max_order=2, verify=True):
        checks = {}
        A = _amat_eye()
        for j in (4, 3, 2, 1):
            fj = FUND.root_F(j)
            powers = [meye(4, ONE, ZERO)]
            for _ in range(max_order):
                powers.append(mmul(powers[-1], fj, ZERO))
            factor = _amat_zero()
            for r in range(max_order + 1):
                c = factor_coefficient(j, r)
                e_pow = root_E(j) ** r
                term_is_zero = True
                for a in range(4):
                    for b in range(4):
                        entry = powers[r][a][b]
                        if entry.is_zero:
                            continue
                        term_is_zero = False
                        factor[a][b] = factor[a][b] + (c * entry) * e_pow
                if r >= 2:
                    checks[f"beta{j}-order-{r}-vanishes"] = term_is_zero
            A = _amat_mul(A, factor)
        # Cartan correction: right multiplication by diag(K_{-lambda_nu})
        for b in range(4):
            kb = K(-LAMBDA_V[b])
            for a in range(4):
                A[a][b] = A[a][b] * kb
        inst = cls(A, checks)
        if verify:
            for tok, m in inst.intertwiner_residuals().items():
                if not miszero(m):
                    raise RuntimeError(
                        f"represented R-matrix fails the intertwiner "
                        f"property against {tok}")
        return inst

    def star_transpose(self):
        out = _amat_zero()
        for i in range(4):
            for j in range(4):
                out[i][j] = star(self.mat[j][i])
        return out

    def represented(self):
        """(rho (x) rho)(R) as a 16x16 scalar matrix, rows indexed 4i + k."""
        out = mzeros(16, 16, ZERO)
        for k in range(4):
            for l in range(4):
                m = FUND.rep(self.mat[k][l])
                for i in range(4):
                    for j in range(4):
                        if m[i][j]:
                            out[4 * i + k][4 * j + l] = m[i][j]
        return out

    def intertwiner_residuals(self):
        """R Delta(X) - Delta_op(X) R on the tensor square, per generator."""
        R16 = self.represented()
        eye4 = meye(4, ONE, ZERO)

        def kron(p, q):
            out = mzeros(16, 16, ZERO)
            for i in range(4):
                for j in range(4):
                    if not p[i][j]:
                        continue
                    for k in range(4):
                        for l in range(4):
                            if q[k][l]:
                                out[4 * i + k][4 * j + l] = p[i][j] * q[k][l]
            return out

        k1 = FUND.K((2, -1))
        k2 = FUND.K((-2, 2))
        k1i = FUND.K((-2, 1))
        k2i = FUND.K((2, -2))
        cops = {
            "E1": ((FUND.E1, eye4), (k1, FUND.E1)),
            "E2": ((FUND.E2, eye4), (k2, FUND.E2)),
            "F1": ((FUND.F1, k1i), (eye4, FUND.F1)),
            "F2": ((FUND.F2, k2i), (eye4, FUND.F2)),
            "K1": ((k1, k1),),
            "K2": ((k2, k2),),
        }
        res = {}
        for tok, pairs in cops.items():
            dlt = mzeros(16, 16, ZERO)
            dop = mzeros(16, 16, ZERO)
            for a, b in pairs:
                dlt = madd(dlt, kron(a, b))
                dop = madd(dop, kron(b, a))
            res[tok] = msub(mmul(R16, dlt, ZERO), mmul(dop, R16, ZERO))
        return res


def quantum_trace_pairing(R=None):
    """The central element (id (x) tau_q)(R* R) / (q - q^-1)^2."""
    if R is None:
        R = TruncatedRMatrix.build()
    Ast = R.star_transpose()
    A = R.mat
    two_rho = 2 * RHO
    total = AE_ZERO
    for j in range(4):
        diag = AE_ZERO
        for i in range(4):
            if Ast[j][i].is_zero or A[i][j].is_zero:
                continue
            diag = diag + Ast[j][i] * A[i][j]
        total = total + _qp(-two_rho.pair(LAMBDA_V[j])) * diag
    return total * (ONE / (_Q * _Q))


def _k2inv(j):
    """K_{2 lambda_j}^{-1}."""
    return K(-(2 * LAMBDA_V[j - 1]))


def casimir_explicit(drop_quantum_term=None):
    """The Casimir in explicit PBW form, classical part plus quantum part.

    `drop_quantum_term` (0..5) removes one addend of the quantum part; used
    as a negative control by the verification suite.
    """
    Es = {j: star(root_E(j)) for j in (1, 2, 3, 4)}
    E = {j: root_E(j) for j in (1, 2, 3, 4)}
    br2sq = BR2 * BR2
    cc = (_qp(-4) * _k2inv(1) + _qp(-2) * _k2inv(2)
          + _qp(2) * _k2inv(3) + _qp(4) * _k2inv(4)) * (ONE / (_Q * _Q))
    cc = cc + Es[1] * E[1] * (_qp(-5) * _k2inv(1) + _qp(1) * _k2inv(3))
    cc = cc + br2sq * (Es[2] * E[2]) * (_qp(-6) * _k2inv(1))
    cc = cc + Es[3] * E[3] * (_qp(-7) * _k2inv(1) + _qp(-1) * _k2inv(2))
    cc = cc + br2sq * (Es[4] * E[4]) * (_qp(-4) * _k2inv(2))
    k1i = _k2inv(1)
    quantum_terms = [
        (-(_Q * BR2 * _qp(-5))) * (Es[1] * Es[3] * E[2] * k1i),
        (-(_Q * BR2 * _qp(-5))) * (Es[2] * E[3] * E[1] * k1i),
        (-(_Q * BR2 * _qp(-7))) * (Es[1] * Es[4] * E[3] * k1i),
        (-(_Q * BR2 * _qp(-7))) * (Es[3] * E[4] * E[1] * k1i),
        (_Q * _Q * _qp(-4)) * (Es[1] * Es[3] * E[3] * E[1] * k1i),
        (_Q * _Q * br2sq * _qp(-7)) * (Es[1] * Es[4] * E[4] * E[1] * k1i),
    ]
    cq = AE_ZERO
    for idx, term in enumerate(quantum_terms):
        if idx == drop_quantum_term:
            continue
        cq = cq + term
    return cc + cq


def casimir_right_form():
    """The Casimir with every Levi letter moved all the way to the right."""
    Es = {j: star(root_E(j)) for j in (1, 2, 3, 4)}
    E = {j: root_E(j) for j in (1, 2, 3, 4)}
    br2sq = BR2 * BR2
    k1i = _k2inv(1)
    out = (_qp(-4) * _k2inv(1) + _qp(-2) * _k2inv(2)
           + _qp(2) * _k2inv(3) + _qp(4) * _k2inv(4)) * (ONE / (_Q * _Q))
    out = out + Es[1] * E[1] * (_qp(-5) * _k2inv(1) + _qp(1) * _k2inv(3))
    out = out + br2sq * (Es[2] * E[2]) * (_qp(-4) * k1i)
    out = out + Es[3] * E[3] * ((_qp(-5) - _Q * _qp(-2)) * k1i + _qp(-1) * _k2inv(2))
    out = out + (_Q * _Q * _qp(-4)) * (Es[3] * E[3] * Es[1] * E[1] * k1i)
    out = out + br2sq * (Es[4] * E[4]) * (_qp(-4) * _k2inv(2) - _Q * _qp(-5) * k1i)
    out = out + (_Q * _Q * br2sq * _qp(-7)) * (Es[4] * E[4] * Es[1] * E[1] * k1i)
    mix = (_qp(2) * (Es[2] * E[3] * E[1]) + _qp(2) * (Es[3] * E[2] * Es[1])
           + Es[3] * E[4] * E[1] + Es[4] * E[3] * Es[1])
    out = out + (-(_Q * BR2 * _qp(-5))) * (mix * k1i)
    return out


def casimir_quantum_parts():
    """The quantum part of the Casimir in its two equivalent forms: the
    direct one and the one with Levi letters moved to the right."""
    Es = {j: star(root_E(j)) for j in (1, 2, 3, 4)}
    E = {j: root_E(j) for j in (1, 2, 3, 4)}
    k1i = _k2inv(1)
    br2sq = BR2 * BR2
    direct = AE_ZERO
    direct = direct + (-(_Q * BR2 * _qp(-5))) * ((Es[1] * Es[3] * E[2] + Es[2] * E[3] * E[1]) * k1i)
    direct = direct + (-(_Q * BR2 * _qp(-7))) * ((Es[1] * Es[4] * E[3] + Es[3] * E[4] * E[1]) * k1i)
    direct = direct + (_Q * _Q * _qp(-4)) * (Es[1] * Es[3] * E[3] * E[1] * k1i)
    direct = direct + (_Q * _Q * br2sq * _qp(-7)) * (Es[1] * Es[4] * E[4] * E[1] * k1i)
    one = AE_ONE
    inner = (Es[2] * E[2]
             - (_Q * _qp(1) / BR2) * (Es[3] * E[3] * (one - (ONE / BR2) * (Es[1] * E[1])))
             - Es[4] * E[4] * (one - (_Q * _qp(-2)) * (Es[1] * E[1])))
    rewritten = (_Q * br2sq * _qp(-5)) * (inner * k1i)
    mix = (_qp(2) * (Es[2] * E[3] * E[1]) + _qp(2) * (Es[3] * E[2] * Es[1])
           + Es[3] * E[4] * E[1] + Es[4] * E[3] * Es[1])
    rewritten = rewritten + (-(_Q * BR2 * _qp(-5))) * (mix * k1i)
    return direct, rewritten


def casimir_eigenvalue(lam):
    """Scalar by which the Casimir acts on the simple module of highest
    weight lam (dominant)."""
    lam = Weight(*lam)
    shifted = lam + RHO
    total = ZERO
    for w in LAMBDA_V:
        total = total + _qp(-2 * w.pair(shifted))
    return total / (_Q * _Q)


GENERATOR_TOKENS = ("E1", "E2", "F1", "F2", ("K", 2, -1), ("K", -2, 2))


def centrality_residuals(C):
    """Commutators of C with all six generators, in normal form."""
    from .pbw import normal_form
    res = {}
    for tok in GENERATOR_TOKENS:
        g = normal_form((tok,))
        name = tok if isinstance(tok, str) else "K" + str(tok[1:])
        res[name] = C * g - g * C
    return res

"""Exact arithmetic in the deformation field Q(v), with v = q^(1/2).

All downstream computations are exact identities of rational functions in a
single deformation variable.  The base variable is v = q^(1/2) rather than q
itself, because the fundamental representation involves half-integer powers
of q; every formula written in q embeds via q = v**2.

A Scalar is a reduced fraction of Laurent polynomials,

    value = v**shift * num(v) / den(v),

kept canonical at all times: num and den are polynomials over Q with nonzero
constant term, den is monic, and gcd(num, den) = 1.  Zero is represented as
num = ().  With this normalization, equality of values is structural
equality of the three fields, so "x == y" and "x - y is zero" agree
bit for bit.

KScalar extends Scalar by three commuting symbols kappa_1, kappa_2, kappa_3
(the formal ratios of the graded inner-product constants) truncated at total
degree two, which is all the Dirac-square computation ever produces.
"""

from __future__ import annotations

from fractions import Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


class PoleError(ZeroDivisionError):
    """Denominator vanishes at the requested evaluation point."""


class KappaDegreeError(ValueError):
    """Total degree in the kappa symbols exceeds the structural cap of 2."""


# ---------------------------------------------------------------------------
# dense polynomials over Q: tuples of Fraction, index = exponent, no trailing
# zeros, () is the zero polynomial
# ---------------------------------------------------------------------------

def _trim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def _pdivmod(a, b):
    # long division over Q; b nonzero
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [_F0] * max(len(a) - db, 0)
    for i in range(len(a) - 1 - db, -1, -1):
        c = r[i + db] / lb
        if c:
            q[i] = c
            for j, cb in enumerate(b):
                r[i + j] -= c * cb
    return _trim(q), _trim(r)


def _pgcd(a, b):
    # monic gcd over Q
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a and a[-1] != 1:
        lc = a[-1]
        a = tuple(c / lc for c in a)
    return a


def _pquo(a, b):
    q, r = _pdivmod(a, b)
    assert not r, "inexact polynomial division"
    return q


class Scalar:
    __slots__ = ("_n", "_d", "_s", "_h")

    def __init__(self, n, d, s):
        # trusted canonical inputs only; use the factory functions below
        self._n = n
        self._d = d
        self._s = s
        self._h = None

    # -- construction -------------------------------------------------------

    @staticmethod
    def _make(num, den, shift):
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if not num:
            return ZERO
        i = 0
        while not num[i]:
            i += 1
        if i:
            shift += i
            num = num[i:]
        j = 0
        while not den[j]:
            j += 1
        if j:
            shift -= j
            den = den[j:]
        if len(den) == 1:
            if den[0] != 1:
                c = den[0]
                num = tuple(x / c for x in num)
            den = (_F1,)
        else:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pquo(num, g)
                den = _pquo(den, g)
            lc = den[-1]
            if lc != 1:
                num = tuple(x / lc for x in num)
                den = tuple(x / lc for x in den)
        return Scalar(num, den, shift)

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self):
        return not self._n

    @property
    def is_polynomial(self):
        """True when the denominator is trivial (value in Z[v, v^-1] over Q)."""
        return self._d == (_F1,)

    def __bool__(self):
        return bool(self._n)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return scalar(other)
        return None

    def __add__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        if not self._n:
            return o
        if not o._n:
            return self
        s = min(self._s, o._s)
        n1 = (_F0,) * (self._s - s) + self._n
        n2 = (_F0,) * (o._s - s) + o._n
        if self._d == o._d:
            return Scalar._make(_padd(n1, n2), self._d, s)
        num = _padd(_pmul(n1, o._d), _pmul(n2, self._d))
        return Scalar._make(num, _pmul(self._d, o._d), s)

    __radd__ = __add__

    def __neg__(self):
        if not self._n:
            return self
        return Scalar(_pneg(self._n), self._d, self._s)

    def __sub__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        if not self._n or not o._n:
            return ZERO
        n1, d1 = self._n, self._d
        n2, d2 = o._n, o._d
        # cross-reduce so the product of reduced fractions is reduced
        if len(d2) > 1:
            g = _pgcd(n1, d2)
            if len(g) > 1:
                n1 = _pquo(n1, g)
                d2 = _pquo(d2, g)
        if len(d1) > 1:
            g = _pgcd(n2, d1)
            if len(g) > 1:
                n2 = _pquo(n2, g)
                d1 = _pquo(d1, g)
        return Scalar._make(_pmul(n1, n2), _pmul(d1, d2), self._s + o._s)

    __rmul__ = __mul__

    def inv(self):
        if not self._n:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar._make(self._d, self._n, -self._s)

    def __truediv__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return self._n == o._n and self._d == o._d and self._s == o._s

    def __hash__(self):
        if self._h is None:
            self._h = hash((self._n, self._d, self._s))
        return self._h

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, v0):
        """Exact value at v = v0 (a Fraction); raises PoleError at poles."""
        v0 = Fraction(v0)
        if not self._n:
            return _F0
        den = _F0
        for c in reversed(self._d):
            den = den * v0 + c
        if den == 0:
            raise PoleError(f"denominator vanishes at v = {v0}")
        num = _F0
        for c in reversed(self._n):
            num = num * v0 + c
        return num * v0 ** self._s / den

    # -- formatting ---------------------------------------------------------

    def canon_str(self):
        """Canonical string form; equal scalars stringify identically."""
        if not self._n:
            return "0"

        def poly_str(cs, shift):
            parts = []
            for e, c in enumerate(cs):
                if not c:
                    continue
                k = e + shift
                if k == 0:
                    parts.append(f"{c}")
                elif c == 1:
                    parts.append(f"v^{k}")
                elif c == -1:
                    parts.append(f"-v^{k}")
                else:
                    parts.append(f"{c}*v^{k}")
            return " + ".join(parts).replace("+ -", "- ")

        num = poly_str(self._n, self._s)
        if self._d == (_F1,):
            return num
        return f"({num}) / ({poly_str(self._d, 0)})"

    def __repr__(self):
        return self.canon_str()


ZERO = Scalar((), (_F1,), 0)
ONE = Scalar((_F1,), (_F1,), 0)


def scalar(c):
    """Embed a rational number as a constant Scalar."""
    c = Fraction(c)
    if not c:
        return ZERO
    return Scalar((c,), (_F1,), 0)


def v_power(k):
    """v**k."""
    return Scalar((_F1,), (_F1,), k)


def q_power(k):
    """q**k = v**(2k)."""
    return Scalar((_F1,), (_F1,), 2 * k)


def laurent_v(coeffs):
    """Scalar from a {v-exponent: rational} mapping."""
    if not coeffs:
        return ZERO
    lo = min(coeffs)
    hi = max(coeffs)
    cs = [_F0] * (hi - lo + 1)
    for e, c in coeffs.items():
        cs[e - lo] += Fraction(c)
    return Scalar._make(tuple(cs), (_F1,), lo)


def laurent_q(coeffs):
    """Scalar from a {q-exponent: rational} mapping."""
    return laurent_v({2 * e: c for e, c in coeffs.items()})


def q_number(n, base=1):
    """Quantum integer [n] = (q^n - q^-n)/(q - q^-1), optionally in base q**base."""
    d = base
    num = q_power(d * n) - q_power(-d * n)
    den = q_power(d) - q_power(-d)
    return num / den


def q_factorial(n, base=1):
    """[n]! = [n][n-1]...[1]; the empty product is 1.  Rejects n < 0."""
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    out = ONE
    for k in range(2, n + 1):
        out = out * q_number(k, base)
    return out


def q_binomial(m, k, base=1):
    """Quantum binomial coefficient [m choose k] in base q**base."""
    if k < 0 or k > m:
        return ZERO
    return q_factorial(m, base) / (q_factorial(k, base) * q_factorial(m - k, base))


def evaluate(s, v0):
    """Exact rational value of the scalar s at v = v0."""
    return s.evaluate(v0)


# shared constants
Q_SC = q_power(1) - q_power(-1)      # Q = q - q^-1
BR2 = q_number(2)                    # [2]_q


# ---------------------------------------------------------------------------
# kappa extension
# ---------------------------------------------------------------------------

_K_CAP = 2


class KScalar:
    """Polynomial of total degree <= 2 in kappa_1..kappa_3 over Scalar."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        # trusted: dict {(e1, e2, e3): Scalar}, zero values pruned
        self.terms = terms

    @staticmethod
    def from_scalar(s):
        if isinstance(s, (int, Fraction)):
            s = scalar(s)
        if s.is_zero:
            return KZERO
        return KScalar({(0, 0, 0): s})

    @staticmethod
    def _coerce(other):
        if isinstance(other, KScalar):
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return KScalar.from_scalar(other)
        return None

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def __add__(self, other):
        o = KScalar._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = out.get(m, ZERO) + c
            if s.is_zero:
                out.pop(m, None)
            else:
                out[m] = s
        return KScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return KScalar({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = KScalar._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = KScalar._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = KScalar._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                if sum(m) > _K_CAP:
                    raise KappaDegreeError(
                        f"kappa monomial {m} exceeds total degree {_K_CAP}")
                c = c1 * c2
                if c.is_zero:
                    continue
                s = out.get(m, ZERO) + c
                if s.is_zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return KScalar(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = KScalar._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, k1, k2, k3):
        """Full substitution kappa_i -> Scalar; a ring homomorphism."""
        out = ZERO
        for (e1, e2, e3), c in self.terms.items():
            out = out + c * k1 ** e1 * k2 ** e2 * k3 ** e3
        return out

    def substitute_ratios(self, s2, s3):
        """Impose kappa_2 = s2*kappa_1 and kappa_3 = s3*kappa_1."""
        out = KZERO
        for (e1, e2, e3), c in self.terms.items():
            mono = KScalar({(e1 + e2 + e3, 0, 0): c * s2 ** e2 * s3 ** e3})
            out = out + mono
        return out

    def div_kappa(self, mono):
        """Exact division by a kappa monomial; raises if not divisible."""
        out = {}
        for m, c in self.terms.items():
            r = tuple(a - b for a, b in zip(m, mono))
            if any(e < 0 for e in r):
                raise ValueError("KScalar not divisible by requested kappa monomial")
            out[r] = c
        return KScalar(out)

    def scalar_part(self):
        """The Scalar value of a kappa-free element; raises otherwise."""
        if not self.terms:
            return ZERO
        if set(self.terms) != {(0, 0, 0)}:
            raise ValueError("KScalar has nontrivial kappa content")
        return self.terms[(0, 0, 0)]

    def canon_str(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms):
            c = self.terms[m]
            sym = "*".join(
                f"k{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(m) if e)
            bits.append(f"({c.canon_str()})" + (f"*{sym}" if sym else ""))
        return " + ".join(bits)

    def __repr__(self):
        return self.canon_str()


KZERO = KScalar({})
KONE = KScalar({(0, 0, 0): ONE})


def kappa(i):
    """The symbol kappa_i, i in {1, 2, 3}."""
    if i not in (1, 2, 3):
        raise ValueError("kappa index must be 1, 2 or 3")
    m = [0, 0, 0]
    m[i - 1] = 1
    return KScalar({tuple(m): ONE})

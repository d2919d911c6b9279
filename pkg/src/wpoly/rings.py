"""Division-ring coefficient contexts and their exact element types.

Four coefficient rings are supported: the rationals, small finite fields
GF(p^k) with table-driven arithmetic, rational functions over Q in one
variable, and rational quaternions.  A context bundles one of these rings
with a ring endomorphism S and an S-derivation D obeying the twisted
Leibniz rule D(a*b) = S(a)*D(b) + D(a)*b.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as _igcd

from .errors import CapabilityMissingError, ContextMismatchError

_F0 = Fraction(0)
_F1 = Fraction(1)
_DEN1 = (_F1,)


# ---------------------------------------------------------------------------
# dense univariate polynomials over Fraction, ascending coefficients,
# no trailing zeros; () is the zero polynomial

def qp_trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def qp_add(a, b):
    n = max(len(a), len(b))
    return qp_trim([(a[i] if i < len(a) else _F0) + (b[i] if i < len(b) else _F0)
                    for i in range(n)])


def qp_neg(a):
    return tuple(-c for c in a)


def qp_mul(a, b):
    if not a or not b:
        return ()
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return qp_trim(out)


def qp_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [_F0] * max(0, len(a) - len(b) + 1)
    inv_lc = 1 / b[-1]
    while len(a) >= len(b):
        c = a[-1] * inv_lc
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] -= c * bi
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return qp_trim(q), qp_trim(a)


def _qp_to_int(a):
    """Scale a Fraction tuple to a primitive integer list."""
    lcm = 1
    for c in a:
        d = c.denominator
        lcm = lcm * d // _igcd(lcm, d)
    ints = [int(c * lcm) for c in a]
    g = 0
    for v in ints:
        g = _igcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _ip_pseudo_rem(a, b):
    """Pseudo-remainder of integer polynomial a by nonzero b."""
    a = list(a)
    lb = b[-1]
    db = len(b)
    while len(a) >= db:
        c = a.pop()
        if lb != 1:
            a = [lb * v for v in a]
        k = len(a) - db + 1
        for i in range(db - 1):
            a[k + i] -= c * b[i]
        while a and a[-1] == 0:
            a.pop()
    return a


def qp_gcd(a, b):
    """Monic gcd, computed by a primitive PRS over the integers to avoid
    Fraction coefficient blowup."""
    if not a or not b:
        src = a or b
        if not src:
            return ()
        inv_lc = 1 / src[-1]
        return tuple(c * inv_lc for c in src)
    A, B = _qp_to_int(a), _qp_to_int(b)
    while B:
        R = _ip_pseudo_rem(A, B)
        g = 0
        for v in R:
            g = _igcd(g, v)
        if g > 1:
            R = [v // g for v in R]
        A, B = B, R
    lc = Fraction(A[-1])
    return tuple(Fraction(v) / lc for v in A)


def qp_deriv(a):
    return qp_trim([a[i] * i for i in range(1, len(a))])


def qp_neg_x(a):
    """a(-x)."""
    return tuple(c if i % 2 == 0 else -c for i, c in enumerate(a))


def qp_up2(a):
    """a(x^2)."""
    if not a:
        return ()
    out = [_F0] * (2 * len(a) - 1)
    for i, c in enumerate(a):
        out[2 * i] = c
    return tuple(out)


def qp_down2(a):
    """Inverse of qp_up2 for even polynomials."""
    return qp_trim([a[i] for i in range(0, len(a), 2)])


def qp_is_even(a):
    return all(c == 0 for c in a[1::2])


def qp_eval(a, x):
    acc = _F0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _term_str(coeff, var, power):
    if power == 0:
        return str(coeff)
    v = var if power == 1 else f"{var}^{power}"
    if coeff == 1:
        return v
    if coeff == -1:
        return "-" + v
    return f"{coeff}{v}"


def qp_str(a, var):
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        s = _term_str(c, var, i)
        if not parts:
            parts.append(s)
        elif s.startswith("-"):
            parts.append("-" + s[1:])
        else:
            parts.append("+" + s)
    out = parts[0]
    for p in parts[1:]:
        out += p
    return out


# ---------------------------------------------------------------------------
# rational functions over Q

class RatFunc:
    """A rational function over Q in canonical form.

    The denominator is monic and coprime to the numerator; zero is ()/( 1 ).
    The variable name is part of the value, so Q(x) and Q(u) do not mix.
    """

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=(_F1,), var="x", _normalized=False):
        self.var = var
        if _normalized:
            self.num, self.den = num, den
            return
        num = qp_trim(tuple(Fraction(c) for c in num))
        den = qp_trim(tuple(Fraction(c) for c in den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (_F1,)
            return
        if len(num) > 1 and len(den) > 1:
            g = qp_gcd(num, den)
            if len(g) > 1:
                num = qp_divmod(num, g)[0]
                den = qp_divmod(den, g)[0]
        inv_lc = 1 / den[-1]
        self.num = tuple(c * inv_lc for c in num) if inv_lc != 1 else num
        self.den = tuple(c * inv_lc for c in den) if inv_lc != 1 else den

    @classmethod
    def const(cls, q, var="x"):
        q = Fraction(q)
        return cls((q,) if q else (), (_F1,), var, _normalized=True)

    @classmethod
    def gen(cls, var="x"):
        return cls((_F0, _F1), (_F1,), var, _normalized=True)

    def _coerced(self, other):
        if not isinstance(other, RatFunc):
            return None
        if other.var != self.var:
            raise ContextMismatchError("rational functions in different variables")
        return other

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.var == other.var and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.var, self.num, self.den))

    def __add__(self, other):
        if self._coerced(other) is None:
            return NotImplemented
        if self.den == _DEN1 and other.den == _DEN1:
            return RatFunc(qp_add(self.num, other.num), _DEN1, self.var, _normalized=True)
        return RatFunc(qp_add(qp_mul(self.num, other.den), qp_mul(other.num, self.den)),
                       qp_mul(self.den, other.den), self.var)

    def __sub__(self, other):
        if self._coerced(other) is None:
            return NotImplemented
        if self.den == _DEN1 and other.den == _DEN1:
            return RatFunc(qp_add(self.num, qp_neg(other.num)), _DEN1, self.var,
                           _normalized=True)
        return RatFunc(qp_add(qp_mul(self.num, other.den), qp_neg(qp_mul(other.num, self.den))),
                       qp_mul(self.den, other.den), self.var)

    def __neg__(self):
        return RatFunc(qp_neg(self.num), self.den, self.var, _normalized=True)

    def __mul__(self, other):
        if self._coerced(other) is None:
            return NotImplemented
        if self.den == _DEN1 and other.den == _DEN1:
            return RatFunc(qp_mul(self.num, other.num), _DEN1, self.var, _normalized=True)
        return RatFunc(qp_mul(self.num, other.num), qp_mul(self.den, other.den), self.var)

    def __truediv__(self, other):
        if self._coerced(other) is None:
            return NotImplemented
        return self * other.inverse()

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num, self.var)

    def derivative(self):
        n, d = self.num, self.den
        return RatFunc(qp_add(qp_mul(qp_deriv(n), d), qp_neg(qp_mul(n, qp_deriv(d)))),
                       qp_mul(d, d), self.var)

    def subs_square(self):
        """r(x) -> r(x^2)."""
        return RatFunc(qp_up2(self.num), qp_up2(self.den), self.var)

    def subs_neg(self):
        """r(x) -> r(-x)."""
        return RatFunc(qp_neg_x(self.num), qp_neg_x(self.den), self.var)

    def size(self):
        """max(deg num, deg den); a crude height used for search bounds."""
        return max(len(self.num) - 1, len(self.den) - 1, 0)

    def as_fraction(self):
        """The constant value, or None if non-constant."""
        if len(self.num) <= 1 and self.den == (_F1,):
            return self.num[0] if self.num else _F0
        return None

    def __str__(self):
        if not self.num:
            return "0"
        ns = qp_str(self.num, self.var)
        if self.den == (_F1,):
            return ns
        if len([c for c in self.num if c]) > 1:
            ns = f"({ns})"
        return f"{ns}/({qp_str(self.den, self.var)})"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# small finite fields GF(p^k), table arithmetic

@lru_cache(maxsize=None)
def gf_field(p, k, modulus):
    return _GFField(p, k, modulus)


class _GFField:
    """Arithmetic tables for GF(p^k); elements are interned by integer code."""

    def __init__(self, p, k, modulus):
        q = p ** k
        if q > 256:
            raise CapabilityMissingError("table-driven finite fields capped at 256 elements")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        self.p, self.k, self.q, self.modulus = p, k, q, modulus
        self.key = (p, k, modulus)

        def decode(code):
            digits = []
            for _ in range(k):
                digits.append(code % p)
                code //= p
            return digits

        def encode(digits):
            code = 0
            for d in reversed(digits):
                code = code * p + (d % p)
            return code

        self.decode = decode

        def reduce(poly):
            poly = [c % p for c in poly]
            while len(poly) > k:
                lead = poly.pop()
                if lead:
                    shift = len(poly) - k
                    for i in range(k):
                        poly[shift + i] = (poly[shift + i] - lead * modulus[i]) % p
            while len(poly) < k:
                poly.append(0)
            return poly

        self.add = [[encode([(x + y) % p for x, y in zip(decode(a), decode(b))])
                     for b in range(q)] for a in range(q)]
        self.neg = [encode([(-x) % p for x in decode(a)]) for a in range(q)]

        mul = []
        for a in range(q):
            da = decode(a)
            row = []
            for b in range(q):
                db = decode(b)
                prod = [0] * (2 * k - 1 if k > 1 else 1)
                for i, x in enumerate(da):
                    if x:
                        for j, y in enumerate(db):
                            prod[i + j] += x * y
                row.append(encode(reduce(prod)))
            mul.append(row)
        self.mul = mul

        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise ValueError("modulus is not irreducible")
        self.inv = inv

        frob = [a for a in range(q)]
        for _ in range(1):
            frob = [self._pow_int(a, p, mul) for a in range(q)]
        self.frob1 = frob  # a -> a^p

        self.elems = [FFElement(self, code) for code in range(q)]

    @staticmethod
    def _pow_int(a, e, mul):
        r = 1
        b = a
        while e:
            if e & 1:
                r = mul[r][b]
            b = mul[b][b]
            e >>= 1
        return r

    def frob_power(self, code, e):
        for _ in range(e % self.k if self.k else 0):
            code = self.frob1[code]
        return code


class FFElement:
    """An element of a table-driven finite field."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code

    def _check(self, other):
        if not isinstance(other, FFElement):
            return None
        if other.field is not self.field:
            raise ContextMismatchError("elements from different finite fields")
        return other

    def __add__(self, other):
        if self._check(other) is None:
            return NotImplemented
        return self.field.elems[self.field.add[self.code][other.code]]

    def __sub__(self, other):
        if self._check(other) is None:
            return NotImplemented
        return self.field.elems[self.field.add[self.code][self.field.neg[other.code]]]

    def __neg__(self):
        return self.field.elems[self.field.neg[self.code]]

    def __mul__(self, other):
        if self._check(other) is None:
            return NotImplemented
        return self.field.elems[self.field.mul[self.code][other.code]]

    def __truediv__(self, other):
        if self._check(other) is None:
            return NotImplemented
        return self * other.inverse()

    def inverse(self):
        if self.code == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.field.elems[self.field.inv[self.code]]

    def is_zero(self):
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if not isinstance(other, FFElement):
            return NotImplemented
        return self.field.key == other.field.key and self.code == other.code

    def __hash__(self):
        return hash((self.field.key, self.code))

    def __str__(self):
        digits = self.field.decode(self.code)
        if not any(digits):
            return "0"
        parts = []
        for i in range(len(digits) - 1, -1, -1):
            if digits[i] == 0:
                continue
            s = _term_str(digits[i], "w", i)
            parts.append(("+" + s) if parts and not s.startswith("-") else s)
        return "".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# rational quaternions

class Quaternion:
    """A quaternion with rational components a + b*i + c*j + d*k."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b=0, c=0, d=0):
        self.a, self.b, self.c, self.d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)

    def __add__(self, o):
        if not isinstance(o, Quaternion):
            return NotImplemented
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o):
        if not isinstance(o, Quaternion):
            return NotImplemented
        return Quaternion(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o):
        if not isinstance(o, Quaternion):
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __truediv__(self, o):
        if not isinstance(o, Quaternion):
            return NotImplemented
        return self * o.inverse()

    def conjugate(self):
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        return self.a ** 2 + self.b ** 2 + self.c ** 2 + self.d ** 2

    def trace(self):
        return 2 * self.a

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero quaternion")
        return Quaternion(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def is_zero(self):
        return not (self.a or self.b or self.c or self.d)

    def __bool__(self):
        return not self.is_zero()

    def is_central(self):
        return not (self.b or self.c or self.d)

    def components(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, o):
        if not isinstance(o, Quaternion):
            return NotImplemented
        return self.components() == o.components()

    def __hash__(self):
        return hash(self.components())

    def __str__(self):
        parts = []
        for coeff, unit in zip(self.components(), ("", "i", "j", "k")):
            if coeff == 0:
                continue
            if unit:
                s = _term_str(coeff, unit, 1)
            else:
                s = str(coeff)
            parts.append(("+" + s) if parts and not s.startswith("-") else s)
        return "".join(parts) if parts else "0"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# base-field adapters used by the exact linear algebra layer

class QBase:
    """Field operations on Fraction scalars."""

    zero = _F0
    one = _F1

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def is_zero(a):
        return a == 0


class GFpBase:
    """Field operations on int scalars mod p."""

    def __init__(self, p):
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a % self.p == 0


# ---------------------------------------------------------------------------
# contexts

class DivisionRingContext:
    """A coefficient division ring together with (S, D).

    Subclasses fill in the ring-specific pieces; shared capability flags and
    derivation dispatch live here.  Contexts compare equal by configuration,
    which is what the polynomial layer uses to reject mixed operands.
    """

    kind = "?"
    commutative = True
    finite = False
    characteristic = 0
    base_dim = None   # dimension over the central base field, None if infinite
    base = None       # scalar adapter for that base field

    def __init__(self, s_desc, d_desc):
        self.s_desc = s_desc
        self.d_desc = d_desc
        self._validate()
        if d_desc[0] != "zero":
            self._check_sd_samples()

    # -- identity -----------------------------------------------------------
    @property
    def key(self):
        return (self.kind, self._ring_params(), self.s_desc, self.d_desc)

    def _ring_params(self):
        return ()

    def __eq__(self, other):
        return isinstance(other, DivisionRingContext) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"<context {self.describe()}>"

    def describe(self):
        s = {"id": "S=id", "frob": f"S=frob^{self.s_desc[1]}" if len(self.s_desc) > 1 else "S=frob",
             "xsq": "S=x->x^2"}[self.s_desc[0]]
        dkind = self.d_desc[0]
        if dkind == "zero":
            d = "D=0"
        elif dkind == "ddx":
            d = "D=d/d" + self.variable
        else:
            d = f"D=inner({self.d_desc[1]})"
        return f"{self.name} [{s}, {d}]"

    # -- ring-specific hooks --------------------------------------------------
    def _validate(self):
        pass

    def from_int(self, n):
        raise NotImplementedError

    def inv(self, a):
        return a.inverse()

    def is_zero(self, a):
        return a == self.zero

    def elements(self):
        raise CapabilityMissingError(f"{self.name} is not finitely enumerable")

    def sort_key(self, a):
        """A total order key making element listings deterministic."""
        raise NotImplementedError

    def random_element(self, rng, nonzero=False):
        raise NotImplementedError

    # -- S and D ---------------------------------------------------------------
    @property
    def s_is_automorphism(self):
        return self.s_desc[0] in ("id", "frob")

    def S(self, a):
        if self.s_desc[0] == "id":
            return a
        return self._apply_s(a)

    def s_pow(self, a, m):
        for _ in range(m):
            a = self.S(a)
        return a

    def D(self, a):
        kind = self.d_desc[0]
        if kind == "zero":
            return self.zero
        if kind == "inner":
            d = self.d_desc[1]
            return d * a - self.S(a) * d
        return self._apply_ddx(a)

    def s_image_contains(self, a):
        if self.s_desc[0] in ("id", "frob"):
            return True
        return self.s_preimage(a) is not None

    def s_preimage(self, a):
        """An element b with S(b) = a, or None when a is outside S(K)."""
        raise NotImplementedError

    def _apply_s(self, a):
        raise CapabilityMissingError("no nontrivial endomorphism on this ring")

    def _apply_ddx(self, a):
        raise CapabilityMissingError("formal derivative unavailable on this ring")

    # -- base-field vectorization ----------------------------------------------
    def to_vec(self, a):
        raise CapabilityMissingError(f"{self.name} has no finite central base dimension")

    def from_vec(self, vec):
        raise CapabilityMissingError(f"{self.name} has no finite central base dimension")

    # -- construction-time sanity -----------------------------------------------
    def _sample_elements(self):
        raise NotImplementedError

    def _check_sd_samples(self):
        samples = self._sample_elements()
        for a in samples:
            for b in samples:
                lhs = self.D(a * b)
                rhs = self.S(a) * self.D(b) + self.D(a) * b
                if lhs != rhs:
                    raise ValueError("D does not satisfy the twisted Leibniz rule")


class RationalContext(DivisionRingContext):
    kind = "Q"
    name = "Q"
    base_dim = 1
    base = QBase()
    zero = _F0
    one = _F1

    def __init__(self, s_desc=("id",), d_desc=("zero",)):
        super().__init__(s_desc, d_desc)

    def _validate(self):
        if self.s_desc[0] != "id":
            raise CapabilityMissingError("only the identity endomorphism exists on Q")
        if self.d_desc[0] == "ddx":
            raise CapabilityMissingError("no formal derivative on Q")

    def from_int(self, n):
        return Fraction(n)

    def inv(self, a):
        return 1 / a

    def s_preimage(self, a):
        return a

    def sort_key(self, a):
        return a

    def to_vec(self, a):
        return (a,)

    def from_vec(self, vec):
        return Fraction(vec[0])

    def random_element(self, rng, nonzero=False):
        while True:
            a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if a or not nonzero:
                return a

    def _sample_elements(self):
        return [Fraction(n, d) for n in (-2, 0, 1, 3) for d in (1, 2)]


class FiniteFieldContext(DivisionRingContext):
    kind = "GF"
    commutative = True
    finite = True

    def __init__(self, p, k, modulus, s_desc=("frob", 1), d_desc=("zero",), name=None):
        self.field = gf_field(p, k, tuple(modulus))
        self.p, self.k = p, k
        self.characteristic = p
        self.base_dim = k
        self.base = GFpBase(p)
        self.name = name or f"GF({p}^{k})"
        self.zero = self.field.elems[0]
        self.one = self.field.elems[1 % self.field.q]
        if s_desc == ("id",):
            s_desc = ("frob", 0)
        super().__init__(s_desc, d_desc)

    @classmethod
    def F4(cls, s_desc=("frob", 1), d_desc=("zero",)):
        return cls(2, 2, (1, 1, 1), s_desc, d_desc, name="F4")

    @classmethod
    def F8(cls, s_desc=("frob", 1), d_desc=("zero",)):
        return cls(2, 3, (1, 1, 0, 1), s_desc, d_desc, name="F8")

    @classmethod
    def prime_field(cls, p, s_desc=("frob", 0), d_desc=("zero",)):
        return cls(p, 1, (0, 1), s_desc, d_desc, name=f"F{p}")

    def _ring_params(self):
        return self.field.key

    def _validate(self):
        if self.s_desc[0] not in ("frob",):
            raise CapabilityMissingError("finite fields support Frobenius powers only")
        if self.d_desc[0] == "ddx":
            raise CapabilityMissingError("no formal derivative on a finite field")

    @property
    def w(self):
        if self.k < 2:
            raise ValueError("prime field has no generator symbol")
        return self.field.elems[self.field.p]

    def from_int(self, n):
        return self.field.elems[n % self.p]

    def elements(self):
        return list(self.field.elems)

    def sort_key(self, a):
        return a.code

    def random_element(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return self.field.elems[rng.randint(lo, self.field.q - 1)]

    def _apply_s(self, a):
        return self.field.elems[self.field.frob_power(a.code, self.s_desc[1])]

    def s_preimage(self, a):
        e = self.s_desc[1] % self.k
        if e == 0:
            return a
        return self.field.elems[self.field.frob_power(a.code, self.k - e)]

    def to_vec(self, a):
        return tuple(self.field.decode(a.code))

    def from_vec(self, vec):
        code = 0
        for d in reversed([int(v) % self.p for v in vec]):
            code = code * self.p + d
        return self.field.elems[code]

    def _sample_elements(self):
        return self.elements()


class RatFuncContext(DivisionRingContext):
    kind = "QV"

    def __init__(self, variable="x", s_desc=("id",), d_desc=("zero",)):
        self.variable = variable
        self.name = f"Q({variable})"
        self.zero = RatFunc.const(0, variable)
        self.one = RatFunc.const(1, variable)
        super().__init__(s_desc, d_desc)

    def _ring_params(self):
        return (self.variable,)

    def _validate(self):
        if self.s_desc[0] not in ("id", "xsq"):
            raise CapabilityMissingError("rational functions support id or x->x^2 only")
        if self.d_desc[0] == "ddx" and self.s_desc[0] != "id":
            raise CapabilityMissingError("the formal derivative is a derivation only for S=id")

    @property
    def x(self):
        return RatFunc.gen(self.variable)

    def from_int(self, n):
        return RatFunc.const(n, self.variable)

    def sort_key(self, a):
        return (len(a.num), len(a.den), a.num, a.den)

    def random_element(self, rng, nonzero=False):
        while True:
            num = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
            den = [rng.randint(-3, 3) for _ in range(rng.randint(1, 2))]
            if not any(den):
                den = [1]
            a = RatFunc(num, den, self.variable)
            if a or not nonzero:
                return a

    def _apply_s(self, a):
        return a.subs_square()

    def _apply_ddx(self, a):
        return a.derivative()

    def s_image_contains(self, a):
        if self.s_desc[0] == "id":
            return True
        return self.s_preimage(a) is not None

    def s_preimage(self, a):
        if self.s_desc[0] == "id":
            return a
        # r lies in the image of x -> x^2 iff r(x) = r(-x); normalize to an
        # even denominator and test the numerator
        dneg = qp_neg_x(a.den)
        num = qp_mul(a.num, dneg)
        den = qp_mul(a.den, dneg)
        if not qp_is_even(num):
            return None
        return RatFunc(qp_down2(num), qp_down2(den), self.variable)

    def _sample_elements(self):
        x = self.x
        one = self.one
        return [one, x, x * x + one, one / (x + one), self.zero + RatFunc.const(Fraction(-2, 3), self.variable)]


class QuaternionContext(DivisionRingContext):
    kind = "HQ"
    name = "HQ"
    commutative = False
    base_dim = 4
    base = QBase()
    zero = Quaternion(0)
    one = Quaternion(1)

    def __init__(self, s_desc=("id",), d_desc=("zero",)):
        super().__init__(s_desc, d_desc)

    def _validate(self):
        if self.s_desc[0] != "id":
            raise CapabilityMissingError("only the identity endomorphism is offered on HQ")
        if self.d_desc[0] == "ddx":
            raise CapabilityMissingError("no formal derivative on HQ")

    @property
    def i(self):
        return Quaternion(0, 1)

    @property
    def j(self):
        return Quaternion(0, 0, 1)

    @property
    def k(self):
        return Quaternion(0, 0, 0, 1)

    def from_int(self, n):
        return Quaternion(n)

    def s_preimage(self, a):
        return a

    def to_vec(self, a):
        return a.components()

    def from_vec(self, vec):
        return Quaternion(*[Fraction(v) for v in vec])

    def sort_key(self, a):
        return a.components()

    def random_element(self, rng, nonzero=False):
        while True:
            a = Quaternion(*[Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(4)])
            if a or not nonzero:
                return a

    def _sample_elements(self):
        return [Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1),
                Quaternion(0, 0, 0, 1), Quaternion(Fraction(1, 2), -1, 0, 2)]


# ---------------------------------------------------------------------------

_RING_BUILDERS = {
    "Q": lambda: RationalContext,
    "F4": lambda: FiniteFieldContext.F4,
    "F8": lambda: FiniteFieldContext.F8,
    "Qx": lambda: (lambda s_desc=("xsq",), d_desc=("zero",):
                   RatFuncContext("x", s_desc, d_desc)),
    "Qu": lambda: (lambda s_desc=("id",), d_desc=("ddx",):
                   RatFuncContext("u", s_desc, d_desc)),
    "HQ": lambda: QuaternionContext,
}


def make_context(ring, s_desc=None, d_desc=None):
    """Build a context from a short ring tag and optional (S, D) descriptors."""
    try:
        builder = _RING_BUILDERS[ring]()
    except KeyError:
        raise ValueError(f"unknown ring tag {ring!r}") from None
    kwargs = {}
    if s_desc is not None:
        kwargs["s_desc"] = s_desc
    if d_desc is not None:
        kwargs["d_desc"] = d_desc
    return builder(**kwargs)

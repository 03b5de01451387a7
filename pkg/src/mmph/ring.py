"""Exact scalar arithmetic for ray coordinates.

Three coefficient domains are supported: plain rationals, the real
quadratic field Q(sqrt2), and the Eisenstein field Q(omega) with
omega = exp(2*pi*i/3), so that omega**2 == -1 - omega and omega**3 == 1.
A scalar is stored as ``a + b*unit`` with Fraction coefficients, which
keeps equality, conjugation, orthogonality, and ray normalization exact.
Rationals embed into either field; mixing sqrt2 with omega is rejected
rather than lifted into the compositum.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import MmpSyntaxError, RingMismatchError

RATIONAL = "rational"
QUADRATIC = "quadratic"  # a + b*sqrt(2)
EISENSTEIN = "eisenstein"  # a + b*omega

_RING_ORDER = {RATIONAL: 0, QUADRATIC: 1, EISENSTEIN: 2}


def _join(r1: str, r2: str) -> str:
    if r1 == r2:
        return r1
    if r1 == RATIONAL:
        return r2
    if r2 == RATIONAL:
        return r1
    raise RingMismatchError(f"cannot mix {r1} and {r2} scalars")


class RingScalar:
    """Immutable exact scalar ``a + b*unit`` in one of the three rings."""

    __slots__ = ("ring", "a", "b")

    def __init__(self, ring: str, a, b=0):
        if ring not in _RING_ORDER:
            raise ValueError(f"unknown ring tag {ring!r}")
        self.ring = ring
        self.a = Fraction(a)
        self.b = Fraction(b)
        if ring == RATIONAL and self.b != 0:
            raise ValueError("rational scalar cannot carry a unit coefficient")

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, value) -> RingScalar:
        return cls(RATIONAL, value, 0)

    @classmethod
    def sqrt2(cls, coef=1) -> RingScalar:
        return cls(QUADRATIC, 0, coef)

    @classmethod
    def omega(cls, coef=1) -> RingScalar:
        return cls(EISENSTEIN, 0, coef)

    @classmethod
    def omega2(cls, coef=1) -> RingScalar:
        # coef * omega**2 == coef * (-1 - omega)
        c = Fraction(coef)
        return cls(EISENSTEIN, -c, -c)

    def to_ring(self, ring: str) -> RingScalar:
        if ring == self.ring:
            return self
        if self.ring == RATIONAL:
            return RingScalar(ring, self.a, 0)
        raise RingMismatchError(f"cannot coerce {self.ring} scalar into {ring}")

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational_valued(self) -> bool:
        return self.b == 0

    def is_positive(self) -> bool:
        """Exact sign test; defined for real-valued scalars only."""
        if self.ring in (RATIONAL, EISENSTEIN):
            if self.b != 0:
                raise ValueError("sign of a non-real Eisenstein scalar is undefined")
            return self.a > 0
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return a > 0 or b > 0
        if a <= 0 and b <= 0:
            return False
        # opposite signs: compare a^2 with 2 b^2
        return (a > 0) == (a * a > 2 * b * b)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> tuple[RingScalar, RingScalar]:
        if isinstance(other, int):
            other = RingScalar.rational(other)
        elif isinstance(other, Fraction):
            other = RingScalar.rational(other)
        elif not isinstance(other, RingScalar):
            return NotImplemented, NotImplemented
        ring = _join(self.ring, other.ring)
        return self.to_ring(ring), other.to_ring(ring)

    def __add__(self, other):
        x, y = self._coerce(other)
        if x is NotImplemented:
            return NotImplemented
        return RingScalar(x.ring, x.a + y.a, x.b + y.b)

    __radd__ = __add__

    def __neg__(self) -> RingScalar:
        return RingScalar(self.ring, -self.a, -self.b)

    def __sub__(self, other):
        x, y = self._coerce(other)
        if x is NotImplemented:
            return NotImplemented
        return RingScalar(x.ring, x.a - y.a, x.b - y.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        x, y = self._coerce(other)
        if x is NotImplemented:
            return NotImplemented
        a1, b1, a2, b2 = x.a, x.b, y.a, y.b
        if x.ring == RATIONAL:
            return RingScalar(RATIONAL, a1 * a2, 0)
        if x.ring == QUADRATIC:
            return RingScalar(QUADRATIC, a1 * a2 + 2 * b1 * b2, a1 * b2 + b1 * a2)
        # omega**2 == -1 - omega
        return RingScalar(EISENSTEIN, a1 * a2 - b1 * b2, a1 * b2 + b1 * a2 - b1 * b2)

    __rmul__ = __mul__

    def inverse(self) -> RingScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        a, b = self.a, self.b
        if self.ring == RATIONAL:
            return RingScalar(RATIONAL, 1 / a, 0)
        if self.ring == QUADRATIC:
            norm = a * a - 2 * b * b
            return RingScalar(QUADRATIC, a / norm, -b / norm)
        norm = a * a - a * b + b * b  # |a + b*omega|^2
        return RingScalar(EISENSTEIN, (a - b) / norm, -b / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RingScalar.rational(other)
        if not isinstance(other, RingScalar):
            return NotImplemented
        return self * other.inverse()

    def conjugate(self) -> RingScalar:
        """Complex conjugate; identity on the two real rings."""
        if self.ring == EISENSTEIN:
            return RingScalar(EISENSTEIN, self.a - self.b, -self.b)
        return self

    # -- comparison / ordering --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, RingScalar):
            return NotImplemented
        if self.a != other.a or self.b != other.b:
            return False
        return self.ring == other.ring or self.b == 0

    def __hash__(self) -> int:
        ring = self.ring if self.b != 0 else RATIONAL
        return hash((ring, self.a, self.b))

    def sort_key(self) -> tuple:
        return (self.a, self.b)

    def __repr__(self) -> str:
        return f"RingScalar({self.ring!r}, {self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        unit = "r2" if self.ring == QUADRATIC else "w"
        head = "" if self.a == 0 else f"{self.a}"
        coef = "" if abs(self.b) == 1 else str(abs(self.b))
        sign = "-" if self.b < 0 else ("+" if head else "")
        return f"{head}{sign}{coef}{unit}"


ZERO = RingScalar.rational(0)
ONE = RingScalar.rational(1)


# -- scalar text grammar ----------------------------------------------------
#
#   scalar := term (('+'|'-') term)*
#   term   := [INT] ('w' | 'w2' | 'r2')  |  INT
#
# 'w' is omega, 'w2' is omega**2 (expanded to -1-omega), 'r2' is sqrt2.

_TERM = re.compile(r"([+-]?)(\d+)?(w2|w|r2)?")
_UNICODE_ALIASES = {"ω": "w", "√": "r", "²": "2"}


def parse_scalar(text: str) -> RingScalar:
    s = text
    for src, dst in _UNICODE_ALIASES.items():
        s = s.replace(src, dst)
    s = "".join(s.split())
    if not s:
        raise MmpSyntaxError("empty scalar")
    value = ZERO
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, unit = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (digits is None and unit is None):
            raise MmpSyntaxError(f"malformed scalar {text!r} at offset {pos}")
        if not first and not sign:
            raise MmpSyntaxError(f"missing '+'/'-' between terms in {text!r}")
        coef = Fraction(int(digits)) if digits is not None else Fraction(1)
        if sign == "-":
            coef = -coef
        if unit is None:
            term = RingScalar.rational(coef)
        elif unit == "w":
            term = RingScalar.omega(coef)
        elif unit == "w2":
            term = RingScalar.omega2(coef)
        else:
            term = RingScalar.sqrt2(coef)
        value = value + term
        pos = m.end()
        first = False
    return value


def format_scalar(x: RingScalar) -> str:
    """Render a scalar with integer coefficients in the text grammar."""
    a, b = x.a, x.b
    if a.denominator != 1 or b.denominator != 1:
        raise ValueError(f"cannot format non-integral scalar {x!r}; clear denominators first")
    an, bn = a.numerator, b.numerator
    if x.ring == EISENSTEIN and an == bn != 0:
        return _coef_str(-an) + "w2"  # a(1 + omega) == -a * omega**2
    parts: list[str] = []
    if an != 0:
        parts.append(str(an))
    if bn != 0:
        unit = "r2" if x.ring == QUADRATIC else "w"
        term = _coef_str(bn) + unit
        if parts and bn > 0:
            term = "+" + term
        parts.append(term)
    return "".join(parts) if parts else "0"


def _coef_str(c: int) -> str:
    if c == 1:
        return ""
    if c == -1:
        return "-"
    return str(c)


# -- vectors and rays --------------------------------------------------------


def coerce_vector(components: Iterable) -> tuple[RingScalar, ...]:
    """Promote all components to one common ring tag."""
    comps = []
    for c in components:
        if isinstance(c, (int, Fraction)):
            c = RingScalar.rational(c)
        comps.append(c)
    if not comps:
        raise ValueError("empty vector")
    ring = RATIONAL
    for c in comps:
        ring = _join(ring, c.ring)
    return tuple(c.to_ring(ring) for c in comps)


def _components(v) -> tuple[RingScalar, ...]:
    return v.components if isinstance(v, Ray) else tuple(v)


def hermitian_inner(u, v) -> RingScalar:
    """Exact Hermitian inner product, conjugating the first argument."""
    uc, vc = _components(u), _components(v)
    if len(uc) != len(vc):
        raise RingMismatchError(f"dimension mismatch: {len(uc)} vs {len(vc)}")
    total = ZERO
    for x, y in zip(uc, vc):
        total = total + x.conjugate() * y
    return total


def is_proportional(u, v) -> bool:
    """True iff all 2x2 minors of the pair vanish (projective equality)."""
    uc, vc = _components(u), _components(v)
    if len(uc) != len(vc):
        raise RingMismatchError(f"dimension mismatch: {len(uc)} vs {len(vc)}")
    if all(x.is_zero() for x in uc) or all(x.is_zero() for x in vc):
        return False
    for i in range(len(uc)):
        for j in range(i + 1, len(uc)):
            if not (uc[i] * vc[j] - uc[j] * vc[i]).is_zero():
                return False
    return True


class Ray:
    """Projective equivalence class of a nonzero vector.

    The stored representative is canonical: the first nonzero component is
    exactly 1, so ray equality is componentwise comparison.
    """

    __slots__ = ("components",)

    def __init__(self, components: Sequence[RingScalar]):
        comps = coerce_vector(components)
        pivot = next((c for c in comps if not c.is_zero()), None)
        if pivot is None:
            raise ValueError("zero vector has no ray")
        inv = pivot.inverse()
        self.components = tuple(c * inv for c in comps)

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def ring(self) -> str:
        return self.components[0].ring

    def conjugate(self) -> tuple[RingScalar, ...]:
        return tuple(c.conjugate() for c in self.components)

    def sort_key(self) -> tuple:
        return tuple(c.sort_key() for c in self.components)

    def integral_components(self) -> tuple[RingScalar, ...]:
        """Representative scaled to integer coefficients (for display)."""
        denoms = [f.denominator for c in self.components for f in (c.a, c.b)]
        nums = [abs(f.numerator) for c in self.components for f in (c.a, c.b) if f != 0]
        scale = Fraction(_lcm(denoms), _gcd(nums))
        return tuple(c * scale for c in self.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ray):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return "Ray({" + ",".join(format_ray_component(c) for c in self.integral_components()) + "})"


def format_ray_component(c: RingScalar) -> str:
    return format_scalar(c)


def _gcd(values: list[int]) -> int:
    g = 0
    for v in values:
        g = _gcd2(g, v)
    return g or 1


def _gcd2(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _lcm(values: list[int]) -> int:
    out = 1
    for v in values:
        out = out * v // _gcd2(out, v)
    return out


def normalize_ray(u) -> Ray:
    """Canonical projective representative of a nonzero vector."""
    return u if isinstance(u, Ray) else Ray(tuple(u))


# -- exact linear algebra ----------------------------------------------------


def matrix_rank(rows: Sequence[Sequence[RingScalar]]) -> int:
    """Rank by Gaussian elimination over the fraction field."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, len(m)) if not m[r][col].is_zero()), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = m[rank][col].inverse()
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and not m[r][col].is_zero():
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def null_space_unique(rows: Sequence[Sequence[RingScalar]]) -> tuple[RingScalar, ...]:
    """The one-dimensional null space of a rank n-1 matrix with n columns.

    Raises ValueError when the nullity is not exactly 1.
    """
    m = [list(coerce_vector(r)) for r in rows]
    ncols = len(m[0])
    ring = m[0][0].ring
    zero = RingScalar.rational(0).to_ring(ring)
    one = RingScalar.rational(1).to_ring(ring)
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, len(m)) if not m[r][col].is_zero()), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = m[rank][col].inverse()
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and not m[r][col].is_zero():
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    if ncols - rank != 1:
        raise ValueError(f"null space has dimension {ncols - rank}, expected 1")
    free = next(c for c in range(ncols) if c not in pivots)
    sol = [zero] * ncols
    sol[free] = one
    for r, col in enumerate(pivots):
        sol[col] = -m[r][free]
    return tuple(sol)

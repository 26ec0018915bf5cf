"""Exact scalars, monomials, monomial orders, gradings, and sparse polynomials.

Coefficients are exact: arbitrary-precision rationals (stdlib ``Fraction``)
or a prime field F_p with residues stored as plain ints in ``[0, p)``.
Variables live in a fixed :class:`VariableTable`; position 0 is the
*greatest* variable under every order defined here, so a row-major table
``x[1,1], x[1,2], ...`` puts ``x[1,1]`` on top.  Monomials are sparse,
canonically encoded exponent vectors; polynomials are term sequences kept
strictly descending under the ring's monomial order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "PrimeField",
    "RationalField",
    "QQ",
    "field_from_name",
    "VariableTable",
    "Monomial",
    "MONOMIAL_ONE",
    "mono_mul",
    "mono_divides",
    "mono_div",
    "mono_lcm",
    "mono_dense",
    "MonomialOrder",
    "LexOrder",
    "GrevlexOrder",
    "BlockElimOrder",
    "order_from_name",
    "monomial_compare",
    "GradingSpec",
    "MINUS_INFINITY",
    "weighted_degree",
    "PolyRing",
    "Polynomial",
    "format_polynomial",
]


# ---------------------------------------------------------------------------
# coefficient fields


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """Arithmetic modulo a prime ``p``; elements are ints reduced to [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    @property
    def name(self) -> str:
        return f"fp:{self.p}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def of_int(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in prime field")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        return pow(a, e, self.p)

    def is_negative(self, a: int) -> bool:
        # residues carry no sign; formatting treats them all as non-negative
        return False

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class RationalField:
    """The rationals, with elements held as ``Fraction`` (always reduced)."""

    __slots__ = ()

    name = "qq"
    zero = Fraction(0)
    one = Fraction(1)

    def of_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        return 1 / a

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        return a / b

    def pow(self, a: Fraction, e: int) -> Fraction:
        return a**e

    def is_negative(self, a: Fraction) -> bool:
        return a < 0

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("RationalField")

    def __repr__(self) -> str:
        return "RationalField()"


QQ = RationalField()


def field_from_name(name: str):
    """Parse a field tag: ``qq`` or ``fp:<prime>``."""
    if name == "qq":
        return QQ
    if name.startswith("fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field {name!r} (expected 'qq' or 'fp:<prime>')")


# ---------------------------------------------------------------------------
# variable tables


class VariableTable:
    """An ordered tuple of distinct variable names.

    Position 0 holds the greatest variable.  Monomials refer to variables by
    position, so two tables of equal names are interchangeable.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names
        self._index = {s: i for i, s in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def position(self, name: str) -> int:
        return self._index[name]

    def name(self, pos: int) -> str:
        return self.names[pos]

    def prepend(self, *extra: str) -> "VariableTable":
        """New table with ``extra`` inserted ahead of (greater than) all."""
        return VariableTable(tuple(extra) + self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableTable) and other.names == self.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableTable({list(self.names)!r})"


# ---------------------------------------------------------------------------
# monomials
#
# Canonical encoding: tuple of (position, exponent) pairs, strictly
# increasing positions, all exponents > 0.  The empty tuple is 1.


def _mk(exps: tuple, deg: int) -> "Monomial":
    m = Monomial.__new__(Monomial)
    m.exps = exps
    m.deg = deg
    return m


class Monomial:
    __slots__ = ("exps", "deg")

    def __init__(self, pairs: Iterable[tuple] = ()):
        acc: dict = {}
        for pos, e in pairs:
            if e < 0:
                raise ValueError("negative exponent")
            if pos < 0:
                raise ValueError("negative variable position")
            if e:
                acc[pos] = acc.get(pos, 0) + e
        self.exps = tuple(sorted(acc.items()))
        self.deg = sum(acc.values())

    def degree(self) -> int:
        return self.deg

    def support(self) -> frozenset:
        return frozenset(p for p, _ in self.exps)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and other.exps == self.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __bool__(self) -> bool:
        return bool(self.exps)

    def __repr__(self) -> str:
        return f"Monomial({list(self.exps)!r})"


MONOMIAL_ONE = Monomial()


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    ue, ve = u.exps, v.exps
    if not ue:
        return v
    if not ve:
        return u
    out = []
    i = j = 0
    nu, nv = len(ue), len(ve)
    while i < nu and j < nv:
        pu, eu = ue[i]
        pv, ev = ve[j]
        if pu < pv:
            out.append(ue[i])
            i += 1
        elif pu > pv:
            out.append(ve[j])
            j += 1
        else:
            out.append((pu, eu + ev))
            i += 1
            j += 1
    out.extend(ue[i:])
    out.extend(ve[j:])
    return _mk(tuple(out), u.deg + v.deg)


def mono_divides(d: Monomial, m: Monomial) -> bool:
    """True when ``d`` divides ``m``."""
    de, me = d.exps, m.exps
    if len(de) > len(me) or d.deg > m.deg:
        return False
    j = 0
    nm = len(me)
    for pos, e in de:
        while j < nm and me[j][0] < pos:
            j += 1
        if j >= nm or me[j][0] != pos or me[j][1] < e:
            return False
        j += 1
    return True


def mono_div(m: Monomial, d: Monomial) -> Monomial:
    """The quotient m/d; requires d | m."""
    if not d.exps:
        return m
    de = dict(d.exps)
    out = []
    for pos, e in m.exps:
        r = e - de.pop(pos, 0)
        if r < 0:
            raise ValueError("monomial quotient is not a monomial")
        if r:
            out.append((pos, r))
    if de:
        raise ValueError("monomial quotient is not a monomial")
    return _mk(tuple(out), m.deg - d.deg)


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    ue, ve = u.exps, v.exps
    if not ue:
        return v
    if not ve:
        return u
    out = []
    i = j = 0
    nu, nv = len(ue), len(ve)
    deg = 0
    while i < nu and j < nv:
        pu, eu = ue[i]
        pv, ev = ve[j]
        if pu < pv:
            out.append(ue[i])
            deg += eu
            i += 1
        elif pu > pv:
            out.append(ve[j])
            deg += ev
            j += 1
        else:
            e = eu if eu >= ev else ev
            out.append((pu, e))
            deg += e
            i += 1
            j += 1
    for pair in ue[i:]:
        out.append(pair)
        deg += pair[1]
    for pair in ve[j:]:
        out.append(pair)
        deg += pair[1]
    return _mk(tuple(out), deg)


def mono_dense(m: Monomial, n: int) -> list:
    vec = [0] * n
    for pos, e in m.exps:
        if pos >= n:
            raise ValueError("monomial position outside variable table")
        vec[pos] = e
    return vec


# ---------------------------------------------------------------------------
# monomial orders
#
# Each order maps a monomial to a sort key (a flat int tuple) such that key
# comparison agrees with the order; keys are cached per order instance.


class MonomialOrder:
    kind = "?"
    __slots__ = ("table", "_cache")

    def __init__(self, table: VariableTable):
        self.table = table
        self._cache: dict = {}

    def key(self, m: Monomial) -> tuple:
        k = self._cache.get(m.exps)
        if k is None:
            k = self._key(m)
            self._cache[m.exps] = k
        return k

    def _key(self, m: Monomial) -> tuple:
        raise NotImplementedError

    def compare(self, u: Monomial, v: Monomial) -> int:
        """-1, 0 or 1 as u <, =, > v."""
        if u.exps == v.exps:
            return 0
        return -1 if self.key(u) < self.key(v) else 1

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and other.table == self.table

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.table))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.table!r})"


class LexOrder(MonomialOrder):
    kind = "lex"
    __slots__ = ()

    def _key(self, m: Monomial) -> tuple:
        return tuple(mono_dense(m, len(self.table)))


def _grev_key(vec: Sequence[int]) -> tuple:
    # degree first, then reversed exponents negated: the last place where two
    # equal-degree monomials differ decides, smaller exponent there wins
    return (sum(vec), tuple(-e for e in reversed(vec)))


class GrevlexOrder(MonomialOrder):
    kind = "grevlex"
    __slots__ = ()

    def _key(self, m: Monomial) -> tuple:
        deg, rev = _grev_key(mono_dense(m, len(self.table)))
        return (deg,) + rev


class BlockElimOrder(MonomialOrder):
    """Eliminate the first ``front`` variables: any monomial touching the
    front block beats every monomial free of it.  Both blocks compare by
    grevlex."""

    kind = "block"
    __slots__ = ("front",)

    def __init__(self, table: VariableTable, front: int):
        if not 1 <= front < len(table):
            raise ValueError("front block size out of range")
        super().__init__(table)
        self.front = front

    def _key(self, m: Monomial) -> tuple:
        vec = mono_dense(m, len(self.table))
        fdeg, frev = _grev_key(vec[: self.front])
        bdeg, brev = _grev_key(vec[self.front :])
        return (fdeg,) + frev + (bdeg,) + brev

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BlockElimOrder)
            and other.table == self.table
            and other.front == self.front
        )

    def __hash__(self) -> int:
        return hash(("BlockElimOrder", self.table, self.front))


def order_from_name(name: str, table: VariableTable) -> MonomialOrder:
    if name == "lex":
        return LexOrder(table)
    if name == "grevlex":
        return GrevlexOrder(table)
    raise ValueError(f"unknown order {name!r} (expected 'lex' or 'grevlex')")


def monomial_compare(order: MonomialOrder, u: Monomial, v: Monomial) -> int:
    for m in (u, v):
        for pos, _ in m.exps:
            if pos >= len(order.table):
                raise ValueError("monomial does not fit the order's table")
    return order.compare(u, v)


# ---------------------------------------------------------------------------
# gradings

MINUS_INFINITY = float("-inf")


class GradingSpec:
    """Positive integer weight per variable; degree of a monomial is the
    weighted exponent sum."""

    __slots__ = ("table", "weights")

    def __init__(self, table: VariableTable, weights: Iterable[int]):
        weights = tuple(weights)
        if len(weights) != len(table):
            raise ValueError("one weight per variable required")
        if any((not isinstance(w, int)) or w < 1 for w in weights):
            raise ValueError("weights must be positive integers")
        self.table = table
        self.weights = weights

    @classmethod
    def uniform(cls, table: VariableTable, weight: int = 1) -> "GradingSpec":
        return cls(table, (weight,) * len(table))

    def monomial_degree(self, m: Monomial) -> int:
        w = self.weights
        return sum(w[pos] * e for pos, e in m.exps)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradingSpec)
            and other.table == self.table
            and other.weights == self.weights
        )

    def __hash__(self) -> int:
        return hash((self.table, self.weights))


def weighted_degree(grading: GradingSpec, f: "Polynomial"):
    """Weighted degree of a homogeneous polynomial.

    Returns ``MINUS_INFINITY`` for the zero polynomial and ``None`` when the
    terms do not share one weighted degree.
    """
    if not f.terms:
        return MINUS_INFINITY
    degs = {grading.monomial_degree(m) for m, _ in f.terms}
    if len(degs) != 1:
        return None
    return degs.pop()


# ---------------------------------------------------------------------------
# polynomials


class PolyRing:
    """A polynomial ring: variable table + monomial order + coefficient field."""

    __slots__ = ("table", "order", "field")

    def __init__(self, table: VariableTable, order: MonomialOrder, field):
        if order.table != table:
            raise ValueError("order is defined over a different table")
        self.table = table
        self.order = order
        self.field = field

    # -- constructors ------------------------------------------------------

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, ((MONOMIAL_ONE, self.field.one),))

    def const(self, c) -> "Polynomial":
        if isinstance(c, int):
            c = self.field.of_int(c)
        if c == 0:
            return self.zero
        return Polynomial(self, ((MONOMIAL_ONE, c),))

    def var(self, pos: int) -> "Polynomial":
        if not 0 <= pos < len(self.table):
            raise ValueError("variable position out of range")
        return Polynomial(self, ((_mk(((pos, 1),), 1), self.field.one),))

    def monomial_poly(self, m: Monomial, c=None) -> "Polynomial":
        if c is None:
            c = self.field.one
        elif isinstance(c, int):
            c = self.field.of_int(c)
        if c == 0:
            return self.zero
        return Polynomial(self, ((m, c),))

    def from_terms(self, pairs: Iterable[tuple]) -> "Polynomial":
        """Canonicalize an arbitrary (Monomial, coefficient) stream."""
        acc: dict = {}
        wrap: dict = {}
        add = self.field.add
        for m, c in pairs:
            if isinstance(c, int) and not isinstance(self.field, PrimeField):
                c = self.field.of_int(c)
            elif isinstance(self.field, PrimeField):
                c = c % self.field.p
            e = m.exps
            if e in acc:
                acc[e] = add(acc[e], c)
            else:
                acc[e] = c
                wrap[e] = m
        key = self.order.key
        terms = tuple(
            (wrap[e], acc[e])
            for e in sorted(acc, key=lambda x: key(wrap[x]), reverse=True)
            if acc[e] != 0
        )
        return Polynomial(self, terms)

    def __eq__(self, other) -> bool:
        if other is self:
            return True
        return (
            isinstance(other, PolyRing)
            and other.table == self.table
            and other.order == self.order
            and other.field == self.field
        )

    def __hash__(self) -> int:
        return hash((self.table, self.order, self.field))

    def __repr__(self) -> str:
        return f"PolyRing({len(self.table)} vars, {self.order.kind}, {self.field.name})"


class Polynomial:
    """Immutable sparse polynomial; ``terms`` is a tuple of (Monomial, coeff)
    pairs, strictly descending under the ring's order, no zero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- inspection --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].exps)

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def lc(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def degree(self):
        if not self.terms:
            return MINUS_INFINITY
        return max(m.deg for m, _ in self.terms)

    def terms_dict(self) -> dict:
        return {m.exps: c for m, c in self.terms}

    # -- arithmetic ---------------------------------------------------------

    def _same_ring(self, other: "Polynomial") -> PolyRing:
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError("polynomials belong to different rings")
        return self.ring

    def _merge(self, other: "Polynomial", negate: bool) -> "Polynomial":
        ring = self._same_ring(other)
        fld = ring.field
        key = ring.order.key
        a, b = self.terms, other.terms
        na, nb = len(a), len(b)
        out = []
        i = j = 0
        while i < na and j < nb:
            ma, ca = a[i]
            mb, cb = b[j]
            if ma.exps == mb.exps:
                c = fld.sub(ca, cb) if negate else fld.add(ca, cb)
                if c != 0:
                    out.append((ma, c))
                i += 1
                j += 1
            elif key(ma) > key(mb):
                out.append(a[i])
                i += 1
            else:
                out.append((mb, fld.neg(cb)) if negate else b[j])
                j += 1
        out.extend(a[i:])
        if negate:
            out.extend((m, fld.neg(c)) for m, c in b[j:])
        else:
            out.extend(b[j:])
        return Polynomial(ring, tuple(out))

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self._merge(other, False)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self._merge(other, True)

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((m, neg(c)) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.ring.field.of_int(other))
        ring = self._same_ring(other)
        fld = ring.field
        mul, add = fld.mul, fld.add
        acc: dict = {}
        wrap: dict = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = mono_mul(ma, mb)
                e = m.exps
                c = mul(ca, cb)
                if e in acc:
                    acc[e] = add(acc[e], c)
                else:
                    acc[e] = c
                    wrap[e] = m
        key = ring.order.key
        terms = tuple(
            (wrap[e], acc[e])
            for e in sorted(acc, key=lambda x: key(wrap[x]), reverse=True)
            if acc[e] != 0
        )
        return Polynomial(ring, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        if c == 0:
            return self.ring.zero
        mul = self.ring.field.mul
        return Polynomial(self.ring, tuple((m, mul(cc, c)) for m, cc in self.terms))

    def term_mul(self, m: Monomial, c=None) -> "Polynomial":
        """Multiply by a single term; order is preserved by multiplicativity."""
        fld = self.ring.field
        if c is None:
            c = fld.one
        if c == 0:
            return self.ring.zero
        mul = fld.mul
        return Polynomial(
            self.ring, tuple((mono_mul(mm, m), mul(cc, c)) for mm, cc in self.terms)
        )

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    def evaluate(self, values: Sequence):
        """Evaluate at a point given as one field element per variable."""
        fld = self.ring.field
        total = fld.zero
        for m, c in self.terms:
            v = c
            for pos, e in m.exps:
                v = fld.mul(v, fld.pow(values[pos], e))
            total = fld.add(total, v)
        return total

    # -- comparison / display ------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and other.terms == self.terms
            and other.ring == self.ring
        )

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"<{format_polynomial(self)}>"


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form: terms descending, ``c*x[i,j]^e`` factors joined
    by ``*``, terms joined by `` + `` / `` - ``."""
    if not f.terms:
        return "0"
    fld = f.ring.field
    names = f.ring.table.names
    parts = []
    for idx, (m, c) in enumerate(f.terms):
        neg = fld.is_negative(c)
        mag = -c if neg else c
        factors = [
            names[pos] if e == 1 else f"{names[pos]}^{e}" for pos, e in m.exps
        ]
        if not factors:
            body = str(mag)
        elif mag == fld.one:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if idx == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)

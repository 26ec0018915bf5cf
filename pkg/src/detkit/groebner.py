"""Buchberger engine, normal forms, and ideal-level operations.

The engine keeps polynomials as lists of ``(sort_key, Monomial, coeff)``
rows in strictly descending key order, so merges compare precomputed keys
instead of re-deriving them.  Bases are kept monic.  Pair selection uses the
sugar strategy; the product (coprime-lead) criterion prunes pairs at
creation and the chain criterion prunes at pop time.  All choices are
deterministic, so a given generator list always yields the same reduced
basis.

Long-running entry points accept a ``deadline`` (a ``time.monotonic`` value);
crossing it raises :class:`BudgetExceeded`.
"""

from __future__ import annotations

from heapq import heappop, heappush
from itertools import count
from time import monotonic
from typing import Iterable, Optional, Sequence

from .poly import (
    BlockElimOrder,
    GrevlexOrder,
    PolyRing,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

__all__ = [
    "BudgetExceeded",
    "UnitIdealError",
    "buchberger",
    "normal_form",
    "s_polynomial",
    "IdealHandle",
    "ideal_member",
    "ideal_equal",
    "ideal_intersect",
    "intersect_all",
    "ideal_sum",
    "krull_dimension",
    "ideal_height",
]


class BudgetExceeded(RuntimeError):
    """A computation ran past its deadline."""


class UnitIdealError(ValueError):
    """Raised where the unit ideal has no meaningful answer (dimension)."""


def _check_deadline(deadline: Optional[float]) -> None:
    if deadline is not None and monotonic() > deadline:
        raise BudgetExceeded("computation exceeded its time budget")


class _BasisElem:
    __slots__ = ("lm", "lmkey", "rows", "sugar", "inv_lc")

    def __init__(self, lm, lmkey, rows, sugar, inv_lc):
        self.lm = lm
        self.lmkey = lmkey
        self.rows = rows
        self.sugar = sugar
        self.inv_lc = inv_lc


def _rows_of(f: Polynomial, key) -> list:
    return [(key(m), m, c) for m, c in f.terms]


def _poly_of(ring: PolyRing, rows: Sequence) -> Polynomial:
    return Polynomial(ring, tuple((m, c) for _, m, c in rows))


def _shift_rows(rows: Sequence, qmono, key) -> list:
    # multiplying by one monomial preserves the descending order
    out = []
    for _, m, c in rows:
        m2 = mono_mul(m, qmono)
        out.append((key(m2), m2, c))
    return out


def _merge_sub(a: Sequence, b: Sequence, field) -> list:
    """a - b on descending row lists."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    sub, neg = field.sub, field.neg
    while i < na and j < nb:
        ka, kb = a[i][0], b[j][0]
        if ka > kb:
            out.append(a[i])
            i += 1
        elif ka < kb:
            kb_, mb, cb = b[j]
            out.append((kb_, mb, neg(cb)))
            j += 1
        else:
            c = sub(a[i][2], b[j][2])
            if c != 0:
                out.append((ka, a[i][1], c))
            i += 1
            j += 1
    out.extend(a[i:])
    for kb_, mb, cb in b[j:]:
        out.append((kb_, mb, neg(cb)))
    return out


def _scaled_sub(work: Sequence, start: int, grows: Sequence, qmono, qc, field, key) -> list:
    """work[start:] - qc * qmono * grows, where the heads cancel exactly.

    The scaled divisor term is materialized lazily and cached, so a long
    irreducible stretch of ``work`` costs one key comparison per term.
    """
    out = []
    i = start + 1
    j = 1
    na, ng = len(work), len(grows)
    mul, sub, neg = field.mul, field.sub, field.neg
    cur = None
    while i < na and j < ng:
        if cur is None:
            _, gm, gc = grows[j]
            gm2 = mono_mul(gm, qmono)
            cur = (key(gm2), gm2, mul(gc, qc))
        ak = work[i][0]
        if ak > cur[0]:
            out.append(work[i])
            i += 1
        elif ak < cur[0]:
            out.append((cur[0], cur[1], neg(cur[2])))
            j += 1
            cur = None
        else:
            c = sub(work[i][2], cur[2])
            if c != 0:
                out.append((ak, work[i][1], c))
            i += 1
            j += 1
            cur = None
    out.extend(work[i:])
    if cur is not None:
        out.append((cur[0], cur[1], neg(cur[2])))
        j += 1
    while j < ng:
        _, gm, gc = grows[j]
        gm2 = mono_mul(gm, qmono)
        out.append((key(gm2), gm2, neg(mul(gc, qc))))
        j += 1
    return out


def _reduce_rows(rows, sugar, elems, field, key, deadline):
    """Fully reduce ``rows`` against ``elems``; returns (rows, sugar).

    Every monomial of the result is divisible by no element's lead.  The
    divisor tried first is always the earliest in ``elems``.
    """
    out = []
    work = list(rows)
    idx = 0
    steps = 0
    while idx < len(work):
        m = work[idx][1]
        hit = None
        for e in elems:
            if mono_divides(e.lm, m):
                hit = e
                break
        if hit is None:
            idx += 1
            continue
        steps += 1
        if (steps & 0xFF) == 0:
            _check_deadline(deadline)
        qmono = mono_div(m, hit.lm)
        qc = field.mul(work[idx][2], hit.inv_lc)
        if idx:
            out.extend(work[:idx])
        work = _scaled_sub(work, idx, hit.rows, qmono, qc, field, key)
        idx = 0
        s = qmono.deg + hit.sugar
        if s > sugar:
            sugar = s
    out.extend(work)
    return out, sugar


def buchberger(gens: Iterable[Polynomial], order=None, deadline=None) -> tuple:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    With ``order`` given (different from the generators' ring order), the
    generators are recast into a ring carrying that order first and the
    result lives there.  Returns a tuple of monic polynomials sorted with
    the greatest lead first; the zero ideal gives ``()``.
    """
    gens = [g for g in gens if g]
    if not gens:
        return ()
    ring = gens[0].ring
    for g in gens[1:]:
        if g.ring != ring:
            raise ValueError("generators belong to different rings")
    if order is not None and order != ring.order:
        ring = PolyRing(ring.table, order, ring.field)
        gens = [ring.from_terms(g.terms) for g in gens]
    fld = ring.field
    key = ring.order.key

    elems: list = []
    heap: list = []
    pending: set = set()
    tick = count()

    def insert(rows, sugar):
        c0 = rows[0][2]
        if c0 != fld.one:
            inv = fld.inv(c0)
            rows = [(k, m, fld.mul(c, inv)) for k, m, c in rows]
        e = _BasisElem(rows[0][1], rows[0][0], rows, sugar, fld.one)
        i = len(elems)
        for j, other in enumerate(elems):
            lcm = mono_lcm(other.lm, e.lm)
            if lcm.deg == other.lm.deg + e.lm.deg:
                continue  # coprime leads: that S-pair always drops to zero
            s = max(
                other.sugar + lcm.deg - other.lm.deg,
                sugar + lcm.deg - e.lm.deg,
            )
            heappush(heap, (s, key(lcm), next(tick), j, i, lcm))
            pending.add((j, i))
        elems.append(e)
        return e

    unit = False
    for g in gens:
        rows, sugar = _reduce_rows(_rows_of(g, key), g.degree(), elems, fld, key, deadline)
        if rows:
            e = insert(rows, sugar)
            if not e.lm.exps:
                unit = True
                break

    while heap and not unit:
        _check_deadline(deadline)
        s, _, _, i, j, lcm = heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        ei, ej = elems[i], elems[j]
        skip = False
        for k2, ek in enumerate(elems):
            if k2 == i or k2 == j:
                continue
            if mono_divides(ek.lm, lcm):
                a = (i, k2) if i < k2 else (k2, i)
                b = (j, k2) if j < k2 else (k2, j)
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        qi = mono_div(lcm, ei.lm)
        qj = mono_div(lcm, ej.lm)
        rows = _merge_sub(
            _shift_rows(ei.rows[1:], qi, key),
            _shift_rows(ej.rows[1:], qj, key),
            fld,
        )
        rows, sugar = _reduce_rows(rows, s, elems, fld, key, deadline)
        if rows:
            e = insert(rows, sugar)
            if not e.lm.exps:
                unit = True

    if unit:
        return (ring.one,)

    # minimal basis: drop any element whose lead another lead divides
    kept = []
    for e in sorted(elems, key=lambda e: e.lmkey):
        if any(mono_divides(f.lm, e.lm) for f in kept):
            continue
        kept.append(e)

    # one interreduction pass gives the reduced basis: leads are fixed, and
    # full tail reduction against the others' leads pins each element
    final: list = []
    for i, e in enumerate(kept):
        others = final + kept[i + 1 :]
        rows, _ = _reduce_rows(e.rows, e.sugar, others, fld, key, deadline)
        final.append(_BasisElem(rows[0][1], rows[0][0], rows, e.sugar, fld.one))
    final.sort(key=lambda e: e.lmkey, reverse=True)
    return tuple(_poly_of(ring, e.rows) for e in final)


def normal_form(f: Polynomial, G: Sequence[Polynomial], deadline=None) -> Polynomial:
    """Remainder of full reduction of ``f`` by ``G`` (in G's listed order).

    ``G`` need not be a Groebner basis; the remainder is only canonical when
    it is.  Membership in the zero ideal (empty ``G``) returns ``f``.
    """
    ring = f.ring
    key = ring.order.key
    elems = []
    for g in G:
        if not g:
            raise ValueError("zero polynomial in divisor list")
        if g.ring != ring:
            raise ValueError("divisor in a different ring")
        elems.append(
            _BasisElem(g.lm, key(g.lm), _rows_of(g, key), g.degree(), ring.field.inv(g.lc))
        )
    if not f:
        return f
    rows, _ = _reduce_rows(_rows_of(f, key), f.degree(), elems, ring.field, key, deadline)
    return _poly_of(ring, rows)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lcm = mono_lcm(f.lm, g.lm)
    fld = f.ring.field
    a = f.term_mul(mono_div(lcm, f.lm), fld.inv(f.lc))
    b = g.term_mul(mono_div(lcm, g.lm), fld.inv(g.lc))
    return a - b


# ---------------------------------------------------------------------------
# ideals


class IdealHandle:
    """An ideal given by generators, with a lazily cached reduced basis."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial]):
        gens = tuple(g for g in gens if g)
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator in a different ring")
        self.ring = ring
        self.gens = gens
        self._gb = None

    def groebner(self, deadline=None) -> tuple:
        if self._gb is None:
            self._gb = buchberger(self.gens, deadline=deadline)
        return self._gb

    def is_zero(self, deadline=None) -> bool:
        if not self.gens:
            return True
        return not self.groebner(deadline)

    def is_unit(self, deadline=None) -> bool:
        gb = self.groebner(deadline)
        return len(gb) == 1 and gb[0].is_constant() and bool(gb[0])

    def __repr__(self) -> str:
        return f"IdealHandle({len(self.gens)} gens over {self.ring!r})"


def ideal_member(f: Polynomial, I: IdealHandle, deadline=None) -> bool:
    if not f:
        return True
    return not normal_form(f, I.groebner(deadline), deadline=deadline)


def ideal_equal(I: IdealHandle, J: IdealHandle, deadline=None) -> bool:
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    return I.groebner(deadline) == J.groebner(deadline)


def ideal_sum(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    return IdealHandle(I.ring, I.gens + J.gens)


def _gens_have_unit(I: IdealHandle) -> bool:
    return any(g.is_constant() and g for g in I.gens)


def ideal_intersect(I: IdealHandle, J: IdealHandle, deadline=None) -> IdealHandle:
    """Intersection via one auxiliary elimination variable.

    Computes a basis of ``w*I + (1-w)*J`` under an order eliminating ``w``
    and keeps the ``w``-free part.  When the ambient order is grevlex the
    kept part is already the reduced basis of the intersection and is cached
    on the returned handle.
    """
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    ring = I.ring
    if not I.gens or not J.gens:
        return IdealHandle(ring, ())
    if _gens_have_unit(I):
        return IdealHandle(ring, J.gens)
    if _gens_have_unit(J):
        return IdealHandle(ring, I.gens)

    wname = "w"
    while wname in ring.table.names:
        wname += "_"
    table2 = ring.table.prepend(wname)
    ring2 = PolyRing(table2, BlockElimOrder(table2, 1), ring.field)

    def lift(f: Polynomial) -> Polynomial:
        return ring2.from_terms(
            (type(m)([(pos + 1, e) for pos, e in m.exps]), c) for m, c in f.terms
        )

    w = ring2.var(0)
    one_minus_w = ring2.one - w
    gens_ext = [w * lift(f) for f in I.gens]
    gens_ext += [one_minus_w * lift(g) for g in J.gens]
    G = buchberger(gens_ext, deadline=deadline)

    kept = []
    for g in G:
        if g.lm.exps and g.lm.exps[0][0] == 0:
            continue  # lead involves w
        # elimination order: a w-free lead forces every term w-free
        assert all(m.exps[0][0] != 0 for m, _ in g.terms if m.exps)
        kept.append(
            ring.from_terms(
                (type(m)([(pos - 1, e) for pos, e in m.exps]), c) for m, c in g.terms
            )
        )
    kept.sort(key=lambda f: ring.order.key(f.lm), reverse=True)
    result = IdealHandle(ring, kept)
    if isinstance(ring.order, GrevlexOrder):
        # the w-free members of a reduced elimination basis restrict to the
        # reduced basis of the intersection when the back-block order is the
        # ambient order
        result._gb = tuple(kept)
    return result


def intersect_all(ring: PolyRing, handles: Sequence[IdealHandle], deadline=None) -> IdealHandle:
    result = IdealHandle(ring, (ring.one,))
    for h in handles:
        result = ideal_intersect(result, h, deadline=deadline)
    return result


def krull_dimension(I: IdealHandle, deadline=None) -> int:
    """Dimension of the quotient by ``I``: the largest number of variables
    no lead monomial of the reduced basis lives entirely inside.

    Raises :class:`UnitIdealError` for the unit ideal.
    """
    gb = I.groebner(deadline)
    n = len(I.ring.table)
    if not gb:
        return n
    if len(gb) == 1 and gb[0].is_constant():
        raise UnitIdealError("unit ideal has no dimension")
    supports = []
    for g in gb:
        mask = 0
        for pos, _ in g.lm.exps:
            mask |= 1 << pos
        supports.append(mask)
    from itertools import combinations

    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            _check_deadline(deadline)
            smask = 0
            for pos in combo:
                smask |= 1 << pos
            if all(sup & ~smask for sup in supports):
                return size
    raise AssertionError("unreachable: empty subset is always independent")


def ideal_height(I: IdealHandle, deadline=None) -> int:
    """Codimension: number of variables minus the dimension."""
    return len(I.ring.table) - krull_dimension(I, deadline)

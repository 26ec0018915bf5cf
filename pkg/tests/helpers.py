"""Independent reference implementations used to pin expected values.

Everything here is written the slow, obvious way on dense exponent vectors
and coefficient dicts, so the package's sparse fast paths have something
honest to disagree with.
"""

from fractions import Fraction
from itertools import combinations, permutations

from detkit.groebner import normal_form, s_polynomial
from detkit.poly import Monomial, Polynomial, mono_divides


# -- dense monomial order comparators ---------------------------------------


def lex_greater(u, v):
    return tuple(u) > tuple(v)


def grevlex_greater(u, v):
    du, dv = sum(u), sum(v)
    if du != dv:
        return du > dv
    if tuple(u) == tuple(v):
        return False
    # walk from the right; the first difference decides, smaller entry wins
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            return a < b
    return False


def block_greater(u, v, front):
    fu, fv = u[:front], v[:front]
    if tuple(fu) != tuple(fv):
        return grevlex_greater(fu, fv)
    return grevlex_greater(u[front:], v[front:])


def dense(m, n):
    vec = [0] * n
    for pos, e in m.exps:
        vec[pos] = e
    return vec


def all_monomials(nvars, maxexp):
    """Every exponent vector with entries in 0..maxexp, as Monomials."""
    vecs = [[]]
    for _ in range(nvars):
        vecs = [v + [e] for v in vecs for e in range(maxexp + 1)]
    return [Monomial([(i, e) for i, e in enumerate(v) if e]) for v in vecs]


# -- naive polynomial arithmetic on dicts ------------------------------------


def naive_mul(a, b, field):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            n = max(len(ea), len(eb))
            ea_, eb_ = list(ea) + [0] * (n - len(ea)), list(eb) + [0] * (n - len(eb))
            key = tuple(x + y for x, y in zip(ea_, eb_))
            while key and key[-1] == 0:
                key = key[:-1]
            out[key] = field.add(out.get(key, field.zero), field.mul(ca, cb))
    return {k: c for k, c in out.items() if c != 0}


def poly_to_dict(f):
    out = {}
    for m, c in f.terms:
        if not m.exps:
            out[()] = c
            continue
        n = m.exps[-1][0] + 1
        vec = [0] * n
        for pos, e in m.exps:
            vec[pos] = e
        out[tuple(vec)] = c
    return out


def random_monomial(rng, nvars, maxdeg):
    pairs = []
    budget = rng.randint(0, maxdeg)
    while budget > 0:
        pos = rng.randrange(nvars)
        e = rng.randint(1, budget)
        pairs.append((pos, e))
        budget -= e
    return Monomial(pairs)


def random_poly(ring, rng, nterms, maxdeg):
    n = len(ring.table)
    pairs = []
    for _ in range(nterms):
        m = random_monomial(rng, n, maxdeg)
        c = ring.field.of_int(rng.randint(-50, 50))
        pairs.append((m, c))
    return ring.from_terms(pairs)


# -- determinants and Pfaffians the textbook way -----------------------------


def perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def det_by_permanents(entries):
    """entries: square list-of-lists of Polynomials (same ring)."""
    n = len(entries)
    ring = None
    for row in entries:
        for f in row:
            ring = f.ring
            break
        if ring:
            break
    total = ring.zero
    for p in permutations(range(n)):
        prod = ring.one
        for i in range(n):
            prod = prod * entries[i][p[i]]
        total = total + prod.scale(ring.field.of_int(perm_sign(p)))
    return total


def pfaffian_by_matchings(rows, entry):
    """Sum over perfect matchings of rows with crossing-count signs.

    ``entry(i, j)`` with i < j gives the Polynomial for that slot; the ring
    is taken from the first entry.
    """
    rows = tuple(rows)
    assert len(rows) % 2 == 0
    ring = entry(rows[0], rows[1]).ring if rows else None

    def matchings(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for k in range(1, len(rest)):
            b = rest[k]
            for tail in matchings(rest[1:k] + rest[k + 1 :]):
                yield [(a, b)] + tail

    if not rows:
        raise ValueError("empty Pfaffian handled by caller")
    total = ring.zero
    for match in matchings(list(rows)):
        # sign = parity of crossings between the chords
        crossings = 0
        for (a, b), (c, d) in combinations(match, 2):
            if a < c < b < d or c < a < d < b:
                crossings += 1
        prod = ring.one
        for a, b in match:
            prod = prod * entry(a, b)
        sign = -1 if crossings % 2 else 1
        total = total + prod.scale(ring.field.of_int(sign))
    return total


# -- misc ---------------------------------------------------------------------


def frac(n, d=1):
    return Fraction(n, d)


def assert_reduced_basis(G):
    """The definitional checks: monic, pairwise lead-minimal, fully
    interreduced, and every S-polynomial drops to zero."""
    if not G:
        return
    ring = G[0].ring
    for g in G:
        assert g.lc == ring.field.one
    for i, g in enumerate(G):
        for j, h in enumerate(G):
            if i != j:
                assert not mono_divides(h.lm, g.lm), (g, h)
                for m, _ in g.terms:
                    assert not mono_divides(h.lm, m), (g, h)
    for g, h in combinations(G, 2):
        assert not normal_form(s_polynomial(g, h), G)
    keys = [ring.order.key(g.lm) for g in G]
    assert keys == sorted(keys, reverse=True)

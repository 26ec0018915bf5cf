"""Case runner: structural checks wired to the exact engine.

A :class:`CaseSpec` names one verification job.  Five checks exist:

- ``decomposition``: the ideal generated by block-constrained minors or
  Pfaffians equals the intersection of the per-block component ideals.
- ``truncation``: dropping generators above a weighted-degree bound yields
  the honest degree truncation, and that truncation matches an intersection
  with one extra block component.
- ``irredundancy``: no component of the intersection can be dropped; probed
  both by recomputing drop-one intersections and by explicit witness
  elements, which must agree.
- ``heights``: the Pfaffian ideal has the expected codimension.
- ``asl``: products of minors indexed by poset chains form a basis in low
  degree, and products of incomparable pairs straighten into such chains.

Reports serialize to a stable JSON layout; the wall-clock field ``millis``
is the only nondeterministic entry and can be excluded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from time import monotonic
from typing import Dict, List, Optional, Sequence, Tuple

from .combinat import MinorIndex, PfaffianIndex, minor_leq, minors_universe
from .detideals import (
    column_grading,
    constrained_minor_ideal,
    constrained_pfaffian_ideal,
    constrained_symmetric_ideal,
    generic_matrix,
    ideal_of_minors,
    ideal_of_pfaffians,
    matrix_ring,
    minor_components,
    minor_poly,
    pfaffian_components,
    pfaffian_poly,
    pfaffian_row_component,
    skew_block_grading,
    skew_matrix,
    symmetric_components,
    symmetric_matrix,
    truncated_ideal,
    truncated_ideal_graded,
    truncation_rank,
)
from .groebner import (
    BudgetExceeded,
    IdealHandle,
    ideal_equal,
    ideal_height,
    ideal_intersect,
    ideal_member,
)
from .linalg import rank, solve_column
from .poly import field_from_name, order_from_name

__all__ = [
    "CaseError",
    "CaseSpec",
    "Report",
    "run_case",
    "run_suite",
    "suite_document",
    "load_suite_config",
    "builtin_suite",
]

CHECKS = ("decomposition", "truncation", "irredundancy", "heights", "asl")
KINDS = ("generic", "symmetric", "skew")
MUTATIONS = ("drop-generator", "flip-block")


class CaseError(ValueError):
    """A case specification that cannot be run."""


@dataclass
class CaseSpec:
    case: str
    check: str = "decomposition"
    kind: str = "generic"
    m: Optional[int] = None
    n: Optional[int] = None
    t: Optional[int] = None
    R: Tuple[int, ...] = ()
    r: Tuple[int, ...] = ()
    C: Tuple[int, ...] = ()
    c: Tuple[int, ...] = ()
    p: Optional[int] = None
    q: Optional[int] = None
    d: Optional[int] = None
    field: str = "fp:32003"
    order: str = "grevlex"
    budget_sec: float = 60.0
    mutate: Optional[str] = None

    _FIELDS = (
        "case", "check", "kind", "m", "n", "t", "R", "r", "C", "c",
        "p", "q", "d", "field", "order", "budget_sec", "mutate",
    )

    @classmethod
    def from_dict(cls, doc: dict, where: str = "case") -> "CaseSpec":
        unknown = set(doc) - set(cls._FIELDS)
        if unknown:
            raise CaseError(f"{where}: unknown keys {sorted(unknown)}")
        kwargs = dict(doc)
        for key in ("R", "r", "C", "c"):
            if key in kwargs:
                val = kwargs[key]
                if not isinstance(val, (list, tuple)) or not all(
                    isinstance(x, int) for x in val
                ):
                    raise CaseError(f"{where}.{key}: expected a list of integers")
                kwargs[key] = tuple(val)
        spec = cls(**kwargs)
        spec.validate(where)
        return spec

    # -- validation --------------------------------------------------------

    def _need(self, where: str, **named):
        for name, val in named.items():
            if val is None:
                raise CaseError(f"{where}.{name}: required for check={self.check!r}")

    def validate(self, where: str = "case") -> None:
        if not self.case or not isinstance(self.case, str):
            raise CaseError(f"{where}.case: nonempty string required")
        if self.check not in CHECKS:
            raise CaseError(f"{where}.check: must be one of {CHECKS}")
        if self.kind not in KINDS:
            raise CaseError(f"{where}.kind: must be one of {KINDS}")
        if self.mutate is not None:
            if self.mutate not in MUTATIONS:
                raise CaseError(f"{where}.mutate: must be one of {MUTATIONS}")
            if self.check != "decomposition":
                raise CaseError(f"{where}.mutate: only decomposition cases mutate")
        if self.budget_sec <= 0:
            raise CaseError(f"{where}.budget_sec: must be positive")
        try:
            field_from_name(self.field)
        except ValueError as e:
            raise CaseError(f"{where}.field: {e}") from None
        if self.order not in ("grevlex", "lex"):
            raise CaseError(f"{where}.order: must be 'grevlex' or 'lex'")

        if self.check in ("decomposition", "irredundancy"):
            self._validate_shape(where)
        elif self.check == "truncation":
            if self.kind == "symmetric":
                raise CaseError(f"{where}.kind: no truncation for symmetric")
            if self.kind == "generic":
                self._need(where, m=self.m, n=self.n, t=self.t)
                if self.m < 1 or self.n < 1:
                    raise CaseError(f"{where}.n: dimensions must be positive")
                if self.t < 1:
                    raise CaseError(f"{where}.t: must be positive")
            else:
                self._need(where, n=self.n, t=self.t)
                if self.n < 2:
                    raise CaseError(f"{where}.n: need n >= 2")
                if self.t % 2 or self.t < 2:
                    raise CaseError(f"{where}.t: even size >= 2 required for skew")
            self._need(where, p=self.p, q=self.q, d=self.d)
            if not 0 < self.p < self.q:
                raise CaseError(f"{where}.p: weights must satisfy 0 < p < q")
            if self.kind == "generic":
                if len(self.C) != 1 or not 0 <= self.C[0] <= self.n:
                    raise CaseError(
                        f"{where}.C: one column split in 0..n required"
                    )
                if self.R or self.r or self.c:
                    raise CaseError(
                        f"{where}: truncation uses only the C split and p, q, d"
                    )
            else:
                if len(self.R) != 1 or not 0 <= self.R[0] <= self.n:
                    raise CaseError(f"{where}.R: one row split in 0..n required")
                if self.r or self.C or self.c:
                    raise CaseError(
                        f"{where}: truncation uses only the R split and p, q, d"
                    )
        elif self.check == "heights":
            if self.kind != "skew":
                raise CaseError(f"{where}.kind: heights applies to skew")
            self._need(where, n=self.n, t=self.t)
            if self.n < 2:
                raise CaseError(f"{where}.n: need n >= 2")
            if self.t % 2 or not 2 <= self.t <= self.n:
                raise CaseError(f"{where}.t: even size in 2..n required")
        elif self.check == "asl":
            if self.kind != "generic":
                raise CaseError(f"{where}.kind: asl applies to generic")
            self._need(where, m=self.m, n=self.n, d=self.d)
            if self.m < 1 or self.n < 1 or self.d < 1:
                raise CaseError(f"{where}: m, n, d must be positive")

    def _validate_shape(self, where: str) -> None:
        if self.kind == "generic":
            self._need(where, m=self.m, n=self.n, t=self.t)
            m, n = self.m, self.n
        else:
            self._need(where, n=self.n, t=self.t)
            m = n = self.n
            if self.C or self.c:
                raise CaseError(f"{where}.C: column blocks are generic-only")
        if m < 1 or n < 1:
            raise CaseError(f"{where}.n: dimensions must be positive")
        if self.kind == "skew":
            if self.t % 2 or self.t < 2:
                raise CaseError(f"{where}.t: even size >= 2 required for skew")
        elif self.t < 1:
            raise CaseError(f"{where}.t: must be positive")
        for name, cuts, needs, limit in (
            ("R", self.R, self.r, m),
            ("C", self.C, self.c, n),
        ):
            if len(cuts) != len(needs):
                raise CaseError(f"{where}.{name}: cutoffs and counts differ in length")
            if any(a >= b for a, b in zip(cuts, cuts[1:])):
                raise CaseError(f"{where}.{name}: cutoffs must increase strictly")
            if cuts and not (1 <= cuts[0] and cuts[-1] <= limit):
                raise CaseError(f"{where}.{name}: cutoffs must lie in 1..{limit}")
            if any(x < 0 for x in needs):
                raise CaseError(f"{where}.{name}: counts must be >= 0")

    # -- helpers ------------------------------------------------------------

    def params_dict(self) -> dict:
        return {
            "check": self.check,
            "kind": self.kind,
            "m": self.m if self.kind == "generic" else self.n,
            "n": self.n,
            "t": self.t,
            "R": list(self.R),
            "r": list(self.r),
            "C": list(self.C),
            "c": list(self.c),
            "p": self.p,
            "q": self.q,
            "d": self.d,
            "mutate": self.mutate,
        }

    def deadline(self) -> float:
        return monotonic() + self.budget_sec


@dataclass
class Report:
    case: str
    params: dict
    field: str
    order: str
    verdict: str
    reason: Optional[str]
    components: List[dict]
    witnesses: List[dict]
    stats: dict
    height: Optional[int]
    doset_generators_equal: Optional[bool]
    millis: int

    def to_dict(self, include_timing: bool = True) -> dict:
        doc = {
            "case": self.case,
            "params": self.params,
            "field": self.field,
            "order": self.order,
            "verdict": self.verdict,
            "reason": self.reason,
            "components": self.components,
            "witnesses": self.witnesses,
            "stats": self.stats,
            "height": self.height,
            "doset_generators_equal": self.doset_generators_equal,
        }
        if include_timing:
            doc["millis"] = self.millis
        return doc


def _mk_report(spec, verdict, reason=None, components=None, witnesses=None,
               stats=None, height=None, doset=None, millis=0) -> Report:
    return Report(
        case=spec.case,
        params=spec.params_dict(),
        field=spec.field,
        order=spec.order,
        verdict=verdict,
        reason=reason,
        components=components or [],
        witnesses=witnesses or [],
        stats=stats or {"lhs_gens": None, "rhs_gb_size": None},
        height=height,
        doset_generators_equal=doset,
        millis=millis,
    )


def _ring_for(spec: CaseSpec):
    fld = field_from_name(spec.field)
    if spec.kind == "generic":
        ms = generic_matrix(spec.m, spec.n)
    elif spec.kind == "symmetric":
        ms = symmetric_matrix(spec.n)
    else:
        ms = skew_matrix(spec.n)
    ring = matrix_ring(ms, fld, order=spec.order)
    return ms, ring


def _flip_blocks(spec: CaseSpec) -> Tuple[tuple, tuple]:
    """Bump the first usable block cutoff by one; a mutation canary."""
    limit_r = spec.m if spec.kind == "generic" else spec.n
    R, C = spec.R, spec.C
    if R:
        bumped = R[0] + 1
        if bumped <= limit_r and (len(R) < 2 or bumped < R[1]):
            return (bumped,) + R[1:], C
    if C:
        bumped = C[0] + 1
        if bumped <= spec.n and (len(C) < 2 or bumped < C[1]):
            return R, (bumped,) + C[1:]
    raise CaseError(f"{spec.case}: flip-block has no room to move a cutoff")


def _components_for(spec: CaseSpec, ms, ring, R, C) -> List[Tuple[str, IdealHandle]]:
    if spec.kind == "generic":
        return minor_components(ring, ms, spec.t, R=R, r=spec.r, C=C, c=spec.c)
    if spec.kind == "symmetric":
        return symmetric_components(ring, ms, spec.t, R=R, r=spec.r)
    return pfaffian_components(ring, ms, spec.t, R=R, r=spec.r)


def _lhs_for(spec: CaseSpec, ms, ring) -> IdealHandle:
    if spec.kind == "generic":
        return constrained_minor_ideal(
            ring, ms, spec.t, R=spec.R, r=spec.r, C=spec.C, c=spec.c
        )
    if spec.kind == "symmetric":
        return constrained_symmetric_ideal(ring, ms, spec.t, R=spec.R, r=spec.r)
    return constrained_pfaffian_ideal(ring, ms, spec.t, R=spec.R, r=spec.r)


def _intersect_named(ring, components, deadline) -> IdealHandle:
    result = IdealHandle(ring, (ring.one,))
    for _, h in components:
        result = ideal_intersect(result, h, deadline=deadline)
    return result


# ---------------------------------------------------------------------------
# checks


def verify_decomposition(spec: CaseSpec) -> Report:
    start = monotonic()
    deadline = spec.deadline()
    ms, ring = _ring_for(spec)
    lhs = _lhs_for(spec, ms, ring)
    if spec.mutate == "drop-generator":
        if not lhs.gens:
            raise CaseError(f"{spec.case}: no generator to drop")
        lhs = IdealHandle(ring, lhs.gens[1:])
    R, C = spec.R, spec.C
    if spec.mutate == "flip-block":
        R, C = _flip_blocks(spec)
    components = _components_for(spec, ms, ring, R, C)
    comp_docs = [{"name": name, "irredundant": None} for name, _ in components]
    stats = {"lhs_gens": len(lhs.gens), "rhs_gb_size": None}
    doset = None
    try:
        rhs = _intersect_named(ring, components, deadline)
        stats["rhs_gb_size"] = len(rhs.groebner(deadline))
        equal = ideal_equal(lhs, rhs, deadline)
        if spec.kind == "symmetric":
            doset_lhs = constrained_symmetric_ideal(
                ring, ms, spec.t, R=spec.R, r=spec.r, doset_only=True
            )
            doset = ideal_equal(lhs, doset_lhs, deadline)
    except BudgetExceeded:
        return _mk_report(
            spec, "SKIPPED", reason="budget exceeded", components=comp_docs,
            stats=stats, millis=int((monotonic() - start) * 1000),
        )
    return _mk_report(
        spec,
        "EQUAL" if equal else "NOT_EQUAL",
        components=comp_docs,
        stats=stats,
        doset=doset,
        millis=int((monotonic() - start) * 1000),
    )


def verify_truncation(spec: CaseSpec) -> Report:
    start = monotonic()
    deadline = spec.deadline()
    ms, ring = _ring_for(spec)
    if spec.kind == "generic":
        a = spec.C[0]
        grading = column_grading(ms, a, spec.p, spec.q)
        base = ideal_of_minors(ring, ms, spec.t)
        rk = truncation_rank(spec.t, spec.p, spec.q, spec.d)
        extra = ("minors({},cols<={})".format(rk, a), ideal_of_minors(ring, ms, rk, col_limit=a))
    else:
        Rb = spec.R[0]
        grading = skew_block_grading(ms, Rb, spec.p, spec.q)
        base = ideal_of_pfaffians(ring, ms, spec.t)
        rk = truncation_rank(spec.t, spec.p, spec.q, spec.d)
        extra = (
            "pfaffians({},rows<={})".format(rk, Rb),
            pfaffian_row_component(ring, ms, rk, Rb),
        )
    filtered = truncated_ideal(base, grading, spec.d)
    comp_docs = [
        {"name": "base", "irredundant": None},
        {"name": extra[0], "irredundant": None},
    ]
    stats = {"lhs_gens": len(filtered.gens), "rhs_gb_size": None}
    try:
        graded = truncated_ideal_graded(base, grading, spec.d)
        rhs = ideal_intersect(base, extra[1], deadline=deadline)
        stats["rhs_gb_size"] = len(rhs.groebner(deadline))
        ok = ideal_equal(filtered, graded, deadline) and ideal_equal(
            graded, rhs, deadline
        )
    except BudgetExceeded:
        return _mk_report(
            spec, "SKIPPED", reason="budget exceeded", components=comp_docs,
            stats=stats, millis=int((monotonic() - start) * 1000),
        )
    return _mk_report(
        spec,
        "EQUAL" if ok else "NOT_EQUAL",
        components=comp_docs,
        stats=stats,
        millis=int((monotonic() - start) * 1000),
    )


def check_irredundancy_hypotheses(spec: CaseSpec) -> Dict[str, bool]:
    """The four stated conditions, each over every row (and column) block.

    blocks_strict: cutoffs strictly increase and start at 1 or later.
    mins_strict: counts strictly increase, start at 1 or more, and stay
    below the generator size.
    mins_bounded: each count fits inside its block.
    slack_strict: cutoff-minus-count strictly increases and leaves room for
    a full-size generator avoiding the block remainder.
    """
    groups = []
    if spec.kind == "generic":
        groups.append((spec.R, spec.r, spec.m))
        groups.append((spec.C, spec.c, spec.n))
    else:
        groups.append((spec.R, spec.r, spec.n))
    size = spec.t
    out = {
        "blocks_strict": True,
        "mins_strict": True,
        "mins_bounded": True,
        "slack_strict": True,
    }
    for cuts, needs, limit in groups:
        if not cuts:
            continue
        if not all(a < b for a, b in zip(cuts, cuts[1:])) or cuts[0] < 1:
            out["blocks_strict"] = False
        if (
            not all(a < b for a, b in zip(needs, needs[1:]))
            or needs[0] < 1
            or needs[-1] >= size
        ):
            out["mins_strict"] = False
        if any(need > cut for cut, need in zip(cuts, needs)):
            out["mins_bounded"] = False
        slacks = [cut - need for cut, need in zip(cuts, needs)]
        if not all(a < b for a, b in zip(slacks, slacks[1:])) or (
            slacks and slacks[-1] >= limit - size
        ):
            out["slack_strict"] = False
    return out


def _witness_for(spec: CaseSpec, ms, ring, which: str, block_index: int = -1):
    """Explicit element expected inside every component except ``which``.

    Returns (label, polynomial) or None when the closed form does not fit
    the shape.
    """
    t = spec.t
    if spec.kind == "skew":
        if which == "size":
            if t - 2 < 2:
                return None
            rows = tuple(range(1, t - 1))
        else:
            cut, need = spec.R[block_index], spec.r[block_index]
            if need < 1:
                return None
            top = t + cut - need + 1
            if top > spec.n:
                return None
            rows = tuple(range(1, need)) + tuple(range(cut + 1, top + 1))
            if len(rows) != t or any(a >= b for a, b in zip(rows, rows[1:])):
                return None
        ix = PfaffianIndex(rows)
        return str(ix), pfaffian_poly(ring, ms, ix)
    m = spec.m if spec.kind == "generic" else spec.n
    n = spec.n
    if which == "size":
        if t < 2:
            return None
        rows = cols = tuple(range(1, t))
        ix = MinorIndex(rows, cols)
        return str(ix), minor_poly(ring, ms, ix)
    if which == "row":
        cut, need = spec.R[block_index], spec.r[block_index]
        if need < 1:
            return None
        top = t + cut - need + 1
        if top > m:
            return None
        rows = tuple(range(1, need)) + tuple(range(cut + 1, top + 1))
        # mirrored entries put any column inside the block under symmetry, so
        # the separating minor must be principal on the shifted row set
        cols = rows if spec.kind == "symmetric" else tuple(range(1, t + 1))
    else:
        cut, need = spec.C[block_index], spec.c[block_index]
        if need < 1:
            return None
        top = t + cut - need + 1
        if top > n:
            return None
        cols = tuple(range(1, need)) + tuple(range(cut + 1, top + 1))
        rows = tuple(range(1, t + 1))
    if len(rows) != t or len(cols) != t:
        return None
    if any(a >= b for a, b in zip(rows, rows[1:])):
        return None
    if any(a >= b for a, b in zip(cols, cols[1:])):
        return None
    ix = MinorIndex(rows, cols)
    return str(ix), minor_poly(ring, ms, ix)


def verify_irredundancy(spec: CaseSpec) -> Report:
    start = monotonic()
    deadline = spec.deadline()
    ms, ring = _ring_for(spec)
    components = _components_for(spec, ms, ring, spec.R, spec.C)
    hypotheses = check_irredundancy_hypotheses(spec)
    comp_docs = [{"name": name, "irredundant": None} for name, _ in components]
    stats = {"lhs_gens": None, "rhs_gb_size": None}
    witnesses: List[dict] = []
    try:
        J = _intersect_named(ring, components, deadline)
        stats["lhs_gens"] = len(J.gens)
        stats["rhs_gb_size"] = len(J.groebner(deadline))

        # probe 1: drop each component and see whether the intersection grows
        for i in range(len(components)):
            rest = components[:i] + components[i + 1 :]
            without = _intersect_named(ring, rest, deadline)
            comp_docs[i]["irredundant"] = not ideal_equal(without, J, deadline)

        # probe 2: closed-form witnesses, where the formulas fit
        witness_plan = [("size", -1)]
        witness_plan += [("row", i) for i in range(len(spec.R))]
        if spec.kind == "generic":
            witness_plan += [("col", i) for i in range(len(spec.C))]
        agree = True
        for comp_pos, (which, bi) in enumerate(witness_plan):
            built = _witness_for(spec, ms, ring, which, bi)
            if built is None:
                continue
            label, w = built
            memberships = {
                name: ideal_member(w, h, deadline) for name, h in components
            }
            witnesses.append({"element": label, "memberships": memberships})
            target = components[comp_pos][0]
            expected = {
                name: (name != target) for name, _ in components
            }
            if memberships != expected:
                agree = False
    except BudgetExceeded:
        return _mk_report(
            spec, "SKIPPED", reason="budget exceeded", components=comp_docs,
            witnesses=witnesses, stats=stats,
            millis=int((monotonic() - start) * 1000),
        )
    failed = sorted(name for name, ok in hypotheses.items() if not ok)
    if failed:
        return _mk_report(
            spec, "SKIPPED",
            reason="hypotheses not satisfied: " + ", ".join(failed),
            components=comp_docs, witnesses=witnesses, stats=stats,
            millis=int((monotonic() - start) * 1000),
        )
    all_needed = all(cd["irredundant"] for cd in comp_docs)
    verdict = "EQUAL" if (all_needed and agree) else "NOT_EQUAL"
    reason = None
    if not all_needed:
        lazy = [cd["name"] for cd in comp_docs if not cd["irredundant"]]
        reason = "redundant components: " + ", ".join(lazy)
    elif not agree:
        reason = "witness memberships disagree with drop-one probes"
    return _mk_report(
        spec, verdict, reason=reason, components=comp_docs,
        witnesses=witnesses, stats=stats,
        millis=int((monotonic() - start) * 1000),
    )


def verify_heights(spec: CaseSpec) -> Report:
    start = monotonic()
    deadline = spec.deadline()
    ms, ring = _ring_for(spec)
    I = ideal_of_pfaffians(ring, ms, spec.t)
    stats = {"lhs_gens": len(I.gens), "rhs_gb_size": None}
    try:
        stats["rhs_gb_size"] = len(I.groebner(deadline))
        h = ideal_height(I, deadline)
    except BudgetExceeded:
        return _mk_report(
            spec, "SKIPPED", reason="budget exceeded", stats=stats,
            millis=int((monotonic() - start) * 1000),
        )
    gap = spec.n - spec.t
    expected = (gap + 1) * (gap + 2) // 2
    return _mk_report(
        spec,
        "EQUAL" if h == expected else "NOT_EQUAL",
        reason=None if h == expected else f"height {h}, expected {expected}",
        stats=stats,
        height=h,
        millis=int((monotonic() - start) * 1000),
    )


# -- chain monomials and straightening -----------------------------------------


def _extension_key(ix: MinorIndex):
    return (-ix.size, ix.rows, ix.cols)


def standard_products(m: int, n: int, d: int) -> List[Tuple[MinorIndex, ...]]:
    """All poset chains of minor indices (repeats allowed) with total size
    at most d, each listed once in linear-extension order."""
    universe = sorted(minors_universe(m, n).elements(), key=_extension_key)
    out: List[Tuple[MinorIndex, ...]] = [()]

    def rec(start: int, last, room: int, acc: tuple):
        for j in range(start, len(universe)):
            e = universe[j]
            if e.size > room:
                continue
            if last is not None and not minor_leq(last, e):
                continue
            out.append(acc + (e,))
            rec(j, e, room - e.size, acc + (e,))

    rec(0, None, d, ())
    return out


def _product_poly(ring, ms, chain) -> "object":
    f = ring.one
    for ix in chain:
        f = f * minor_poly(ring, ms, ix)
    return f


def _coeff_matrix(ring, polys):
    monos = sorted(
        {m for f in polys for m, _ in f.terms}, key=ring.order.key, reverse=True
    )
    index = {mm.exps: i for i, mm in enumerate(monos)}
    rows = []
    for f in polys:
        vec = [ring.field.zero] * len(monos)
        for mm, c in f.terms:
            vec[index[mm.exps]] = c
        rows.append(vec)
    return rows, monos


def verify_standard_monomials(spec: CaseSpec) -> Report:
    start = monotonic()
    ms, ring = _ring_for(spec)
    m, n, d = spec.m, spec.n, spec.d
    chains = standard_products(m, n, d)
    polys = [_product_poly(ring, ms, ch) for ch in chains]
    stats = {"lhs_gens": len(chains), "rhs_gb_size": None}

    problems = []
    # basis of the degree-<=d slice: the count matches the monomial count
    # and the products are linearly independent
    expected_dim = comb(m * n + d, d)
    if len(chains) != expected_dim:
        problems.append(
            f"chain count {len(chains)} != dim {expected_dim} of the <=d slice"
        )
    mat, _ = _coeff_matrix(ring, polys)
    if rank(mat, ring.field) != len(polys):
        problems.append("chain products are linearly dependent")

    # straightening: an incomparable pair rewrites into chains through
    # lower-bounded leading factors
    universe = sorted(minors_universe(m, n).elements(), key=_extension_key)
    by_degree: Dict[int, List[Tuple[tuple, object]]] = {}
    for ch, f in zip(chains, polys):
        deg = sum(ix.size for ix in ch)
        by_degree.setdefault(deg, []).append((ch, f))
    checked = 0
    for a, b in combinations(universe, 2):
        if minor_leq(a, b) or minor_leq(b, a):
            continue
        deg = a.size + b.size
        if deg > d:
            continue
        prod = minor_poly(ring, ms, a) * minor_poly(ring, ms, b)
        basis = by_degree.get(deg, [])
        vectors, _ = _coeff_matrix(ring, [f for _, f in basis] + [prod])
        coeffs = solve_column(vectors[:-1], vectors[-1], ring.field)
        if coeffs is None:
            problems.append(f"{a} * {b} does not straighten")
            continue
        for (ch, _), coeff in zip(basis, coeffs):
            if coeff == ring.field.zero:
                continue
            head = ch[0]
            if not (minor_leq(head, a) and minor_leq(head, b)):
                problems.append(
                    f"straightening of {a} * {b} uses {head} not below both"
                )
        checked += 1
    if checked == 0:
        problems.append("no incomparable pair fits the degree bound")

    return _mk_report(
        spec,
        "EQUAL" if not problems else "NOT_EQUAL",
        reason=None if not problems else "; ".join(problems),
        stats=stats,
        millis=int((monotonic() - start) * 1000),
    )


# ---------------------------------------------------------------------------
# dispatch and suites


def run_case(spec: CaseSpec) -> Report:
    spec.validate(spec.case)
    if spec.check == "decomposition":
        return verify_decomposition(spec)
    if spec.check == "truncation":
        return verify_truncation(spec)
    if spec.check == "irredundancy":
        return verify_irredundancy(spec)
    if spec.check == "heights":
        return verify_heights(spec)
    return verify_standard_monomials(spec)


def run_suite(specs: Sequence[CaseSpec]) -> Tuple[List[Report], bool]:
    reports = [run_case(s) for s in specs]
    ok = all(
        r.verdict != "NOT_EQUAL" and r.doset_generators_equal is not False
        for r in reports
    )
    return reports, ok


def suite_document(reports: Sequence[Report], include_timing: bool = True) -> dict:
    counts = {"EQUAL": 0, "NOT_EQUAL": 0, "SKIPPED": 0}
    for r in reports:
        counts[r.verdict] += 1
    ok = all(
        r.verdict != "NOT_EQUAL" and r.doset_generators_equal is not False
        for r in reports
    )
    return {
        "cases": [r.to_dict(include_timing) for r in reports],
        "summary": {
            "total": len(reports),
            "equal": counts["EQUAL"],
            "not_equal": counts["NOT_EQUAL"],
            "skipped": counts["SKIPPED"],
            "ok": ok,
        },
    }


def load_suite_config(path: str) -> List[CaseSpec]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise CaseError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}")
    except OSError as e:
        raise CaseError(f"{path}: {e}")
    if not isinstance(doc, dict) or "cases" not in doc:
        raise CaseError(f"{path}: expected an object with a 'cases' list")
    cases = doc["cases"]
    if not isinstance(cases, list):
        raise CaseError(f"{path}: 'cases' must be a list")
    default_budget = doc.get("budget_sec")
    specs = []
    seen = set()
    for i, entry in enumerate(cases):
        if not isinstance(entry, dict):
            raise CaseError(f"cases[{i}]: expected an object")
        if default_budget is not None and "budget_sec" not in entry:
            entry = dict(entry, budget_sec=default_budget)
        spec = CaseSpec.from_dict(entry, where=f"cases[{i}]")
        if spec.case in seen:
            raise CaseError(f"cases[{i}].case: duplicate id {spec.case!r}")
        seen.add(spec.case)
        specs.append(spec)
    return specs


def builtin_suite() -> List[CaseSpec]:
    """A fast, representative suite shipped with the package."""
    mk = CaseSpec
    return [
        mk("minors-3x3-t2-R1-r1", check="decomposition", kind="generic",
           m=3, n=3, t=2, R=(1,), r=(1,)),
        mk("minors-3x3-t2-R2-r1", check="decomposition", kind="generic",
           m=3, n=3, t=2, R=(2,), r=(1,)),
        mk("minors-3x4-t2-R2-r1-C2-c1", check="decomposition", kind="generic",
           m=3, n=4, t=2, R=(2,), r=(1,), C=(2,), c=(1,)),
        mk("minors-3x3-t3-R12-r12", check="decomposition", kind="generic",
           m=3, n=3, t=3, R=(1, 2), r=(1, 2)),
        mk("symmetric-3-t2-R2-r1", check="decomposition", kind="symmetric",
           n=3, t=2, R=(2,), r=(1,)),
        mk("symmetric-4-t2-R2-r1", check="decomposition", kind="symmetric",
           n=4, t=2, R=(2,), r=(1,)),
        mk("pfaffian-5-t4-R2-r1", check="decomposition", kind="skew",
           n=5, t=4, R=(2,), r=(1,)),
        mk("pfaffian-5-t4-R4-r2", check="decomposition", kind="skew",
           n=5, t=4, R=(4,), r=(2,)),
        mk("pfaffian-5-t4-R3-r3", check="decomposition", kind="skew",
           n=5, t=4, R=(3,), r=(3,)),
        mk("truncation-2x3-t2-a1-d3", check="truncation", kind="generic",
           m=2, n=3, t=2, C=(1,), p=1, q=2, d=3),
        mk("truncation-3x3-t2-a2-d3", check="truncation", kind="generic",
           m=3, n=3, t=2, C=(2,), p=1, q=2, d=3),
        mk("truncation-skew5-t4-R2-d7", check="truncation", kind="skew",
           n=5, t=4, R=(2,), p=1, q=2, d=7),
        mk("irredundancy-4x3-t2-R2-r1", check="irredundancy", kind="generic",
           m=4, n=3, t=2, R=(2,), r=(1,)),
        mk("irredundancy-sym4-t2-R2-r1", check="irredundancy", kind="symmetric",
           n=4, t=2, R=(2,), r=(1,)),
        mk("irredundancy-pfaff6-t4-R2-r2", check="irredundancy", kind="skew",
           n=6, t=4, R=(2,), r=(2,)),
        mk("heights-pfaff-5-t4", check="heights", kind="skew", n=5, t=4),
        mk("heights-pfaff-6-t4", check="heights", kind="skew", n=6, t=4),
        mk("asl-2x3-d2", check="asl", kind="generic", m=2, n=3, d=2),
    ]

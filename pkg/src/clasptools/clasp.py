"""Clasp-number-two models and obstructions.

A clasp disk with two clasp singularities carries signs eps1, eps2, the
linking numbers l1, l2 of the two annular resolution links, a third
linking number l, and a shape: type X (smoothing both clasps leaves a
knot) or type II (a three-component link).  These parameters determine
the Conway polynomial of the knot exactly, and almost determine the
zeroth coefficient HOMFLY polynomial; everything here evaluates or
inverts those closed forms.

Obstruction outputs are necessary conditions only: an empty parameter
enumeration means "no solutions within the bound", never "no clasp
disk".
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import List, Optional, Tuple

from .laurent import LaurentPoly, P0_UNLINK_FACTOR

TYPE_X = "X"
TYPE_II = "II"

_V_INV_MINUS_V = LaurentPoly({(-1, 0): 1, (1, 0): -1})


@dataclass(frozen=True, order=True)
class ClaspParams:
    """Parameters (eps1, eps2, l1, l2, l) of a two-clasp disk of one type."""

    eps1: int
    eps2: int
    l1: int
    l2: int
    l: int
    disk_type: str = TYPE_II

    def __post_init__(self):
        if self.eps1 not in (1, -1) or self.eps2 not in (1, -1):
            raise ValueError("clasp signs must be +1 or -1")
        if self.disk_type not in (TYPE_X, TYPE_II):
            raise ValueError("disk type must be 'X' or 'II'")

    def swapped(self) -> "ClaspParams":
        """The same disk with the two clasps relabeled.

        Swaps (eps1, l1) with (eps2, l2); for type X the off-diagonal
        linking becomes -l-1 (preserving l(l+1)), for type II it becomes
        -l (preserving l^2).
        """
        l = (-self.l - 1) if self.disk_type == TYPE_X else -self.l
        return ClaspParams(self.eps2, self.eps1, self.l2, self.l1, l, self.disk_type)


def model_coefficients(p: ClaspParams) -> Tuple[int, int]:
    """(a2, a4) of the modeled Conway polynomial."""
    e1, e2, l1, l2, l = p.eps1, p.eps2, p.l1, p.l2, p.l
    if p.disk_type == TYPE_X:
        return e1 * l1 + e2 * l2 + e1 * e2, e1 * e2 * (l1 * l2 - l * (l + 1))
    return e1 * l1 + e2 * l2, e1 * e2 * (l1 * l2 - l * l)


def conway_model(p: ClaspParams) -> LaurentPoly:
    """Conway polynomial 1 + a2 z^2 + a4 z^4 of a two-clasp knot."""
    a2, a4 = model_coefficients(p)
    return LaurentPoly({(0, 0): 1, (0, 2): a2, (0, 4): a4})


def link_to_params(lk12: int, lk13: int, lk23: int) -> Tuple[int, int, int]:
    """(l, l1, l2) from the pairwise linking numbers of the smoothed link.

    Inverts lk(K1,K2) = -l, lk(K1,K3) = l1 + l, lk(K2,K3) = l2 + l.
    """
    l = -lk12
    return l, lk13 - l, lk23 - l


def params_to_link(l: int, l1: int, l2: int) -> Tuple[int, int, int]:
    """(lk12, lk13, lk23) of the type-II smoothed link."""
    return -l, l1 + l, l2 + l


def enumerate_params(a2: int, a4: int, disk_type: str, bound: int) -> List[ClaspParams]:
    """All parameters with |l1|, |l2|, |l| <= bound realizing (a2, a4).

    Solved exactly: l2 is linear in l1 given the signs, and l comes from
    a perfect-square test, so the cost is linear in the bound.  Output is
    lexicographically sorted.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if disk_type not in (TYPE_X, TYPE_II):
        raise ValueError("disk type must be 'X' or 'II'")
    out = []
    for e1 in (1, -1):
        for e2 in (1, -1):
            for l1 in range(-bound, bound + 1):
                if disk_type == TYPE_X:
                    l2 = e2 * (a2 - e1 * e2 - e1 * l1)
                else:
                    l2 = e2 * (a2 - e1 * l1)
                if abs(l2) > bound:
                    continue
                m = l1 * l2 - e1 * e2 * a4  # l^2 (type II) or l(l+1) (type X)
                if disk_type == TYPE_II:
                    if m < 0:
                        continue
                    s = isqrt(m)
                    if s * s != m:
                        continue
                    ls = {s, -s}
                else:
                    disc = 1 + 4 * m
                    if disc < 0:
                        continue
                    s = isqrt(disc)
                    if s * s != disc:
                        continue
                    ls = {(-1 + s) // 2, (-1 - s) // 2} if (s % 2 == 1) else set()
                for l in sorted(ls):
                    if abs(l) <= bound:
                        out.append(ClaspParams(e1, e2, l1, l2, l, disk_type))
    return sorted(out)


def typeX_parity_obstruction(a2: int, a4: int) -> bool:
    """True when a4 is odd and a2 even, which rules out a type-X disk."""
    return a4 % 2 == 1 and a2 % 2 == 0


def kadokami_kawamura_excluded(a2: int, a4: int) -> bool:
    """True when a4 = 3 (mod 8) and a2 = 2 (mod 4): no two-clasp disk at all."""
    return a4 % 8 == 3 and a2 % 4 == 2


def p0_model(
    p: ClaspParams,
    p0_K1: LaurentPoly,
    p0_K2: LaurentPoly,
    p0_K3: Optional[LaurentPoly] = None,
) -> LaurentPoly:
    """Modeled zeroth coefficient polynomial of a two-clasp knot.

    Needs the companion polynomials of the annulus cores K1, K2 and, for
    type II only, of the third smoothed component K3.
    """
    e1, e2, l1, l2, l = p.eps1, p.eps2, p.l1, p.l2, p.l
    if p.disk_type == TYPE_II and p0_K3 is None:
        raise ValueError("type II needs the companion polynomial p0_K3")
    if p.disk_type == TYPE_X and p0_K3 is not None:
        raise ValueError("type X has no third companion component")
    acc = LaurentPoly.term(1, ev=2 * (e1 + e2))
    acc = acc + (p0_K1 * p0_K1 * _V_INV_MINUS_V).shift(e1 + 2 * e2 + 2 * l1, 0, e1)
    acc = acc + (p0_K2 * p0_K2 * _V_INV_MINUS_V).shift(e2 + 2 * e1 + 2 * l2, 0, e2)
    if p.disk_type == TYPE_II:
        triple = p0_K1 * p0_K2 * p0_K3 * _V_INV_MINUS_V * _V_INV_MINUS_V
        acc = acc + triple.shift(2 * (l1 + l2 + l) + e1 + e2, 0, e1 * e2)
    return acc


# -- sum-of-two-squares obstruction search -----------------------------------

@dataclass(frozen=True)
class SquareSearchResult:
    status: str  # "found" | "refuted" | "inconclusive"
    reason: str = ""
    f1: Optional[LaurentPoly] = None
    f2: Optional[LaurentPoly] = None


def typeX_sum_of_squares_search(
    p0_K: LaurentPoly,
    eps1: int,
    eps2: int,
    deg_bound: int = 6,
    coeff_bound: int = 8,
    node_cap: int = 500_000,
) -> SquareSearchResult:
    """Search for (p0_K - v^(2(eps1+eps2))) / (v^-2 - 1) = eps1 f1^2 + eps2 f2^2.

    f1, f2 range over Laurent polynomials with purely even or purely odd
    v-exponents in [-deg_bound, deg_bound] and coefficients bounded by
    coeff_bound.  Non-exact division (or an odd exponent surviving it) is
    a definitive refutation for this sign pair; exhausting the bounds or
    the node cap is reported as inconclusive, never as refutation.
    """
    if eps1 not in (1, -1) or eps2 not in (1, -1):
        raise ValueError("signs must be +1 or -1")
    if deg_bound < 0 or coeff_bound < 0:
        raise ValueError("bounds must be nonnegative")
    if any(ez for (_, ez) in p0_K._terms):
        raise ValueError("p0 must be a v-only polynomial")
    target = p0_K - LaurentPoly.term(1, ev=2 * (eps1 + eps2))
    r = target.divide_exact(P0_UNLINK_FACTOR)
    if r is None:
        return SquareSearchResult("refuted", "division by v^-2 - 1 is not exact")
    if any(ev % 2 for (ev, _) in r._terms):
        return SquareSearchResult(
            "refuted", "quotient has odd v-exponents, never a sum of two squares"
        )
    searcher = _SquareSearcher(eps1, eps2, deg_bound, coeff_bound, node_cap)
    hit = searcher.run(r)
    if hit is not None:
        f1, f2 = hit
        check = (f1 * f1).shift(0, 0, eps1) + (f2 * f2).shift(0, 0, eps2)
        assert check == r, "witness verification failed"
        return SquareSearchResult("found", "", f1, f2)
    if searcher.exhausted_cap:
        return SquareSearchResult("inconclusive", "search node cap exhausted")
    return SquareSearchResult("inconclusive", "no witness within bounds")


class _SquareSearcher:
    """Complete frontier-descent search for eps1 f1^2 + eps2 f2^2 = r.

    Walks the contribution exponent E from 2*deg_bound down to
    -2*deg_bound.  At each E the undetermined contributions can only come
    from each f's *next* (highest remaining) term, so the coefficient
    equation at E forces every choice except the genuinely free joint
    splits, which are enumerated.  Joint placements cover the
    cancelling-leading-squares solutions that a residual-top chase would
    miss.  Each f's leading coefficient is normalized positive (f and -f
    square identically).
    """

    def __init__(self, eps1, eps2, deg_bound, coeff_bound, node_cap):
        self.eps = (eps1, eps2)
        self.D = deg_bound
        self.C = coeff_bound
        self.cap = node_cap
        self.nodes = 0
        self.exhausted_cap = False

    def run(self, r: LaurentPoly):
        empty = LaurentPoly.zero()
        return self._rec(2 * self.D, r, (empty, empty), (None, None), (self.D, self.D))

    def _next_slot(self, f: LaurentPoly, par: Optional[int], cap: int, E: int) -> Optional[int]:
        """Exponent where f's next term must sit to contribute at E, or None."""
        if f.is_zero():
            if E % 2:
                return None
            s = E // 2
        else:
            s = E - f.v_degree()
        if s > cap or s < -self.D:
            return None
        if par is not None and s % 2 != par:
            return None
        return s

    def _coeff_options(self, f, eps_i, want):
        """Nonzero next coefficients b with f's contribution at E equal to want."""
        if f.is_zero():
            if eps_i * want <= 0:
                return []
            b = isqrt(eps_i * want)
            return [b] if b * b == eps_i * want and 0 < b <= self.C else []
        a = f.coefficient(f.v_degree(), 0)
        den = 2 * eps_i * a
        if want % den:
            return []
        b = want // den
        return [b] if b != 0 and abs(b) <= self.C else []

    def _placed(self, i, fs, pars, caps, s, b):
        f = fs[i]
        new_f = f + LaurentPoly.term(b, ev=s)
        delta = (f.shift(s, 0, 2 * b) + LaurentPoly.term(b * b, ev=2 * s)).shift(0, 0, self.eps[i])
        nfs = list(fs)
        nfs[i] = new_f
        nps = list(pars)
        nps[i] = s % 2
        ncs = list(caps)
        ncs[i] = s - 2
        return tuple(nfs), tuple(nps), tuple(ncs), delta

    def _rec(self, E, r, fs, pars, caps):
        self.nodes += 1
        if self.nodes > self.cap:
            self.exhausted_cap = True
            return None
        if E < -2 * self.D:
            return (fs[0], fs[1]) if r.is_zero() else None
        if not r.is_zero() and r.v_degree() > E:
            return None
        c = r.coefficient(E, 0)
        slots = [self._next_slot(fs[i], pars[i], caps[i], E) for i in (0, 1)]

        # Nobody contributes at E.
        if c == 0:
            hit = self._rec(E - 1, r, fs, pars, caps)
            if hit is not None:
                return hit

        # Exactly one f contributes.
        for i in (0, 1):
            if slots[i] is None:
                continue
            for b in self._coeff_options(fs[i], self.eps[i], c):
                nfs, nps, ncs, delta = self._placed(i, fs, pars, caps, slots[i], b)
                hit = self._rec(E - 1, r - delta, nfs, nps, ncs)
                if hit is not None:
                    return hit

        # Both contribute at E jointly.
        if slots[0] is not None and slots[1] is not None:
            b0_range = range(1, self.C + 1) if fs[0].is_zero() else [
                b for b in range(-self.C, self.C + 1) if b
            ]
            for b0 in b0_range:
                if fs[0].is_zero():
                    contrib0 = self.eps[0] * b0 * b0
                else:
                    contrib0 = self.eps[0] * 2 * fs[0].coefficient(fs[0].v_degree(), 0) * b0
                for b1 in self._coeff_options(fs[1], self.eps[1], c - contrib0):
                    nfs, nps, ncs, d0 = self._placed(0, fs, pars, caps, slots[0], b0)
                    nfs, nps, ncs, d1 = self._placed(1, nfs, nps, ncs, slots[1], b1)
                    hit = self._rec(E - 1, r - d0 - d1, nfs, nps, ncs)
                    if hit is not None:
                        return hit
        return None

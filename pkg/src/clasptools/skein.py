"""Memoized skein-recursion engines for the HOMFLY, Conway, and zeroth
coefficient polynomials.

The strategy rewrites toward a descending diagram: components are
processed in index order, each traversed from its lowest edge label, and
the first crossing met on its under strand is the skein site.  Switching
it moves the violation strictly later; smoothing drops a crossing; a
descending diagram is an unlink.  Diagrams are R1/R2-simplified at every
node and results are memoized by canonical code with LRU eviction.

Conway polynomials are computed by the same recursion specialized at
v = 1 (split diagrams contribute 0, which prunes hard), and the zeroth
coefficient polynomial uses its simpler skein relation, where the
smoothed child only recurses when the crossing joins a component to
itself.  Agreement of all three routes with the full HOMFLY polynomial
is part of the test suite.
"""

from __future__ import annotations

import sys
from collections import OrderedDict
from typing import Optional, Tuple

from .diagram import Diagram
from .laurent import LaurentPoly, P0_UNLINK_FACTOR, UNLINK_FACTOR

_V2 = LaurentPoly.term(1, ev=2)
_VINV2 = LaurentPoly.term(1, ev=-2)
_VZ = LaurentPoly.term(1, ev=1, ez=1)
_VINVZ = LaurentPoly.term(-1, ev=-1, ez=1)
_Z = LaurentPoly.term(1, ez=1)


class BudgetExceededError(RuntimeError):
    """The skein recursion exceeded its configured node budget."""


class SkeinEngine:
    """Shared-memo invariant calculator.

    The memo tables are caches: recomputing an entry is always safe, so
    concurrent use from several threads is harmless under the GIL; for
    reproducible node counts run single-threaded (the default).
    """

    def __init__(self, max_nodes: int = 10_000_000, memo_capacity: int = 1 << 20):
        self.max_nodes = max_nodes
        self.memo_capacity = memo_capacity
        self.nodes_used = 0
        self._memo_homfly: "OrderedDict[str, LaurentPoly]" = OrderedDict()
        self._memo_conway: "OrderedDict[str, LaurentPoly]" = OrderedDict()
        self._memo_p0: "OrderedDict[str, LaurentPoly]" = OrderedDict()
        if sys.getrecursionlimit() < 100_000:
            sys.setrecursionlimit(100_000)

    # -- public API ----------------------------------------------------

    def homfly(self, d: Diagram) -> LaurentPoly:
        """HOMFLY polynomial under v^-1 P+ - v P- = z P0, P(unknot) = 1."""
        core, loops = _strip_loops(d)
        if core.num_crossings == 0:
            return UNLINK_FACTOR ** (_total_components(d) - 1)
        return self._homfly(core) * UNLINK_FACTOR ** loops

    def conway(self, d: Diagram) -> LaurentPoly:
        """Conway polynomial; 0 for split links."""
        core, loops = _strip_loops(d)
        if core.num_crossings == 0:
            k = _total_components(d)
            return LaurentPoly.one() if k == 1 else LaurentPoly.zero()
        if loops:
            return LaurentPoly.zero()
        return self._conway(core)

    def p0(self, d: Diagram) -> LaurentPoly:
        """Zeroth coefficient polynomial, by its own simplified recursion."""
        core, loops = _strip_loops(d)
        if core.num_crossings == 0:
            return P0_UNLINK_FACTOR ** (_total_components(d) - 1)
        return self._p0(core) * P0_UNLINK_FACTOR ** loops

    def conway_coefficients(self, d: Diagram) -> Tuple[int, int]:
        """(a2, a4) of a knot's Conway polynomial."""
        if d.num_components != 1:
            raise ValueError("conway_coefficients is defined for knots")
        nabla = self.conway(d)
        return nabla.coefficient(0, 2), nabla.coefficient(0, 4)

    # -- internals ------------------------------------------------------

    def _tick(self):
        self.nodes_used += 1
        if self.nodes_used > self.max_nodes:
            raise BudgetExceededError(
                f"skein recursion exceeded {self.max_nodes} nodes"
            )

    def _memo_get(self, memo, key):
        val = memo.get(key)
        if val is not None:
            memo.move_to_end(key)
        return val

    def _memo_put(self, memo, key, val):
        memo[key] = val
        if len(memo) > self.memo_capacity:
            memo.popitem(last=False)

    def _prepare(self, d: Diagram):
        """Simplify, strip loops; returns (core, loops, key or None result)."""
        d = d.simplify()
        core, loops = _strip_loops(d)
        return core, loops

    def _homfly(self, d: Diagram) -> LaurentPoly:
        self._tick()
        core, loops = self._prepare(d)
        if core.num_crossings == 0:
            return UNLINK_FACTOR ** (loops - 1)
        key = core.canonical_code()
        cached = self._memo_get(self._memo_homfly, key)
        if cached is None:
            k = _descending_violation(core)
            if k is None:
                cached = UNLINK_FACTOR ** (core.num_components - 1)
            else:
                sw = self._homfly(core.switch_crossing(k))
                sm = self._homfly(core.smooth_crossing(k))
                if core.signs[k] > 0:
                    cached = _V2 * sw + _VZ * sm
                else:
                    cached = _VINV2 * sw + _VINVZ * sm
            self._memo_put(self._memo_homfly, key, cached)
        if loops:
            return cached * UNLINK_FACTOR ** loops
        return cached

    def _conway(self, d: Diagram) -> LaurentPoly:
        self._tick()
        core, loops = self._prepare(d)
        if core.num_crossings == 0:
            return LaurentPoly.one() if loops == 1 else LaurentPoly.zero()
        if loops:
            return LaurentPoly.zero()  # split: a free loop beside crossings
        key = core.canonical_code()
        cached = self._memo_get(self._memo_conway, key)
        if cached is None:
            k = _descending_violation(core)
            if k is None:
                cached = (
                    LaurentPoly.one()
                    if core.num_components == 1
                    else LaurentPoly.zero()
                )
            else:
                sw = self._conway(core.switch_crossing(k))
                sm = self._conway(core.smooth_crossing(k))
                if core.signs[k] > 0:
                    cached = sw + _Z * sm
                else:
                    cached = sw - _Z * sm
            self._memo_put(self._memo_conway, key, cached)
        return cached

    def _p0(self, d: Diagram) -> LaurentPoly:
        self._tick()
        core, loops = self._prepare(d)
        if core.num_crossings == 0:
            return P0_UNLINK_FACTOR ** (loops - 1)
        key = core.canonical_code()
        cached = self._memo_get(self._memo_p0, key)
        if cached is None:
            k = _descending_violation(core)
            if k is None:
                cached = P0_UNLINK_FACTOR ** (core.num_components - 1)
            else:
                q = core.crossings[k]
                same = core.component_of(q[0]) == core.component_of(q[1])
                sw = self._p0(core.switch_crossing(k))
                if same:
                    sm = self._p0(core.smooth_crossing(k))
                    if core.signs[k] > 0:
                        cached = _V2 * (sw + sm)
                    else:
                        cached = _VINV2 * sw - sm
                else:
                    cached = _V2 * sw if core.signs[k] > 0 else _VINV2 * sw
            self._memo_put(self._memo_p0, key, cached)
        if loops:
            return cached * P0_UNLINK_FACTOR ** loops
        return cached


def _strip_loops(d: Diagram) -> Tuple[Diagram, int]:
    if d.free_loops == 0:
        return d, 0
    return Diagram._trusted(d.crossings, d.signs, 0), d.free_loops


def _total_components(d: Diagram) -> int:
    k = d.num_components
    if k == 0:
        raise ValueError("empty diagram has no invariants")
    return k


def _descending_violation(d: Diagram) -> Optional[int]:
    """First crossing met on its under strand, walking edges in label order."""
    seen = set()
    for e in range(1, d.num_edges + 1):
        k, port = d.incoming_at(e)
        if k in seen:
            continue
        seen.add(k)
        if port == 0:
            return k
    return None


_default_engine = SkeinEngine()


def homfly(d: Diagram) -> LaurentPoly:
    return _default_engine.homfly(d)


def conway(d: Diagram) -> LaurentPoly:
    return _default_engine.conway(d)


def p0(d: Diagram) -> LaurentPoly:
    return _default_engine.p0(d)


def conway_coefficients(d: Diagram) -> Tuple[int, int]:
    return _default_engine.conway_coefficients(d)

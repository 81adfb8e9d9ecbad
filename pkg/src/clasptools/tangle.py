"""Rational tangles and length-three Montesinos knots.

A rational number p/q (or the infinity tangle 1/0) is expanded by a
minimal-absolute-remainder continued fraction [a1..an] satisfying

    p/q = a_n + 1/(a_{n-1} + 1/(... + 1/a_1)),

with a1 != 0 and a possibly zero trailing a_n; ties in the rounding take
the floor.  The tangle Q(p/q) alternates horizontal twist blocks [a_k]
(added) and vertical blocks [1/a_k] (stacked), ending with the
horizontal [a_n].  The Montesinos knot K(r1, r2, r3) is the closure of
Q(r1) + Q(r2) + Q(r3): northeast to northwest, southeast to southwest.

Twist handedness calibration: positive horizontal and positive vertical
twists both cross the SW-NE strand *under* the SE-NW strand.  With this
choice the numerator closure of Q(p/q) has determinant |p|, and
K(-2/3, inf, -2/3) is the connected sum of two *positive* trefoils, the
chirality stated alongside the classification; the audit lives in the
test suite.

Orientation of closures is assigned by component tracing from the
lowest-numbered strand end; multi-component closures are returned as
ordinary diagrams and callers that need knots must check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .diagram import Diagram

End = Tuple  # ("x", crossing_id, slot) or ("b", end_id)


@dataclass(frozen=True)
class ExtendedRational:
    """p/q in lowest terms with q >= 0; q == 0 encodes the infinity tangle."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if q < 0:
            p, q = -p, -q
        if q == 0:
            if p == 0:
                raise ValueError("0/0 is not an extended rational")
            p = 1
        else:
            g = gcd(abs(p), q)
            if g > 1:
                p, q = p // g, q // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinity:
            raise ValueError("infinity has no rational value")
        return Fraction(self.p, self.q)

    @classmethod
    def parse(cls, text: str) -> "ExtendedRational":
        t = text.strip()
        if t in ("inf", "∞", "1/0"):
            return cls(1, 0)
        if "/" in t:
            a, b = t.split("/")
            return cls(int(a), int(b))
        return cls(int(t), 1)

    def __str__(self):
        if self.is_infinity:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class MontesinosDesc:
    """An ordered triple of extended rationals K(r1, r2, r3)."""

    entries: Tuple[ExtendedRational, ExtendedRational, ExtendedRational]

    def __post_init__(self):
        if len(self.entries) != 3:
            raise ValueError("length-three Montesinos descriptions only")

    @classmethod
    def of(cls, *rs) -> "MontesinosDesc":
        entries = tuple(
            r if isinstance(r, ExtendedRational) else ExtendedRational.parse(str(r))
            for r in rs
        )
        return cls(entries)

    @classmethod
    def parse(cls, text: str) -> "MontesinosDesc":
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError("expected three comma-separated fractions")
        return cls(tuple(ExtendedRational.parse(p) for p in parts))

    def __str__(self):
        return "K(%s,%s,%s)" % self.entries


def continued_fraction(r: ExtendedRational) -> List[int]:
    """Minimal-absolute-remainder expansion [a1..an]; see module docstring."""
    if r.is_infinity:
        raise ValueError("infinity has no continued fraction")
    x = r.as_fraction()
    if x == 0:
        return [0]
    outer_first: List[int] = []
    while True:
        floor = x.numerator // x.denominator
        frac = x - floor
        a = floor if frac <= Fraction(1, 2) else floor + 1
        rem = x - a
        outer_first.append(a)
        if rem == 0:
            break
        x = 1 / rem
    return outer_first[::-1]


def evaluate_continued_fraction(a: Sequence[int]) -> Fraction:
    """Reassemble a_n + 1/(a_{n-1} + ... + 1/a_1) exactly."""
    acc = Fraction(a[0])
    for k in a[1:]:
        acc = Fraction(k) + 1 / acc
    return acc


# -- unoriented tangles -------------------------------------------------------

class Tangle:
    """A 4-ended unoriented tangle fragment.

    Crossings have slots 0..3 in counterclockwise order; the strand
    through slots (0, 2) passes under the strand through (1, 3).  ``pair``
    is the strand involution on crossing slots and boundary ends; the
    four open boundary ends are named NW, NE, SW, SE.
    """

    def __init__(self):
        self.num_crossings = 0
        self.pair: Dict[End, End] = {}
        self.boundary: Dict[str, End] = {}
        self.loops = 0
        self._next_end = 0

    def _new_end(self) -> End:
        e = ("b", self._next_end)
        self._next_end += 1
        return e

    def _join(self, x: End, y: End):
        self.pair[x] = y
        self.pair[y] = x

    def copy(self) -> "Tangle":
        t = Tangle()
        t.num_crossings = self.num_crossings
        t.pair = dict(self.pair)
        t.boundary = dict(self.boundary)
        t.loops = self.loops
        t._next_end = self._next_end
        return t

    def _absorb(self, other: "Tangle") -> Dict[str, End]:
        """Add a disjoint copy of other; returns its boundary-end map."""
        coff = self.num_crossings
        eoff = self._next_end

        def shift(e: End) -> End:
            if e[0] == "x":
                return ("x", e[1] + coff, e[2])
            return ("b", e[1] + eoff)

        for x, y in other.pair.items():
            self.pair[shift(x)] = shift(y)
        self.num_crossings += other.num_crossings
        self._next_end += other._next_end
        self.loops += other.loops
        return {tag: shift(e) for tag, e in other.boundary.items()}

    def _connect(self, e1: End, e2: End):
        """Glue two boundary ends, fusing their strands."""
        x = self.pair.pop(e1)
        self.pair.pop(x, None)
        if x == e2:
            # e1 and e2 were the two ends of one strand: it closes up.
            self.loops += 1
            return
        y = self.pair.pop(e2)
        self.pair.pop(y, None)
        self._join(x, y)


def _crossing(variant: str) -> Tangle:
    """One crossing with diagonal ends; variant 'A' has SW-NE under, 'B' SE-NW under."""
    t = Tangle()
    t.num_crossings = 1
    ends = {tag: t._new_end() for tag in ("NW", "NE", "SW", "SE")}
    if variant == "A":
        compass = {0: "SW", 1: "SE", 2: "NE", 3: "NW"}
    else:
        compass = {0: "SE", 1: "NE", 2: "NW", 3: "SW"}
    for slot, tag in compass.items():
        t._join(("x", 0, slot), ends[tag])
    t.boundary = ends
    return t


def _zero_tangle() -> Tangle:
    t = Tangle()
    ends = {tag: t._new_end() for tag in ("NW", "NE", "SW", "SE")}
    t._join(ends["NW"], ends["NE"])
    t._join(ends["SW"], ends["SE"])
    t.boundary = ends
    return t


def _infinity_tangle() -> Tangle:
    t = Tangle()
    ends = {tag: t._new_end() for tag in ("NW", "NE", "SW", "SE")}
    t._join(ends["NW"], ends["SW"])
    t._join(ends["NE"], ends["SE"])
    t.boundary = ends
    return t


def tangle_sum(a: Tangle, b: Tangle) -> Tangle:
    out = a.copy()
    bmap = out._absorb(b)
    out._connect(out.boundary["NE"], bmap["NW"])
    out._connect(out.boundary["SE"], bmap["SW"])
    out.boundary = {
        "NW": out.boundary["NW"],
        "SW": out.boundary["SW"],
        "NE": bmap["NE"],
        "SE": bmap["SE"],
    }
    return out


def tangle_product(a: Tangle, b: Tangle) -> Tangle:
    """a stacked on top of b."""
    out = a.copy()
    bmap = out._absorb(b)
    out._connect(out.boundary["SW"], bmap["NW"])
    out._connect(out.boundary["SE"], bmap["NE"])
    out.boundary = {
        "NW": out.boundary["NW"],
        "NE": out.boundary["NE"],
        "SW": bmap["SW"],
        "SE": bmap["SE"],
    }
    return out


def horizontal_twists(n: int) -> Tangle:
    """The [n] tangle: |n| crossings in a row."""
    if n == 0:
        return _zero_tangle()
    variant = "A" if n > 0 else "B"
    t = _crossing(variant)
    for _ in range(abs(n) - 1):
        nxt = _crossing(variant)
        out = t.copy()
        m = out._absorb(nxt)
        out._connect(out.boundary["NE"], m["NW"])
        out._connect(out.boundary["SE"], m["SW"])
        out.boundary = {
            "NW": out.boundary["NW"],
            "SW": out.boundary["SW"],
            "NE": m["NE"],
            "SE": m["SE"],
        }
        t = out
    return t


def vertical_twists(n: int) -> Tangle:
    """The [1/n] tangle: |n| crossings in a column (infinity tangle at n = 0)."""
    if n == 0:
        return _infinity_tangle()
    variant = "A" if n > 0 else "B"
    t = _crossing(variant)
    for _ in range(abs(n) - 1):
        nxt = _crossing(variant)
        out = t.copy()
        m = out._absorb(nxt)
        out._connect(out.boundary["NW"], m["SW"])
        out._connect(out.boundary["NE"], m["SE"])
        out.boundary = {
            "SW": out.boundary["SW"],
            "SE": out.boundary["SE"],
            "NW": m["NW"],
            "NE": m["NE"],
        }
        t = out
    return t


def rational_tangle(r: ExtendedRational) -> Tangle:
    """Q(p/q) built from the continued fraction blocks."""
    if r.is_infinity:
        return _infinity_tangle()
    a = continued_fraction(r)
    n = len(a)
    t: Optional[Tangle] = None
    for k in range(1, n + 1):
        horizontal = (k % 2) == (n % 2)
        block = horizontal_twists(a[k - 1]) if horizontal else vertical_twists(a[k - 1])
        if t is None:
            t = block
        elif horizontal:
            t = tangle_sum(t, block)
        else:
            t = tangle_product(t, block)
    return t


def closure_tangle(t: Tangle) -> Tangle:
    """Numerator closure in tangle space: join NE to NW and SE to SW."""
    out = t.copy()
    out._connect(out.boundary["NE"], out.boundary["NW"])
    out._connect(out.boundary["SE"], out.boundary["SW"])
    out.boundary = {}
    return out


def closure(t: Tangle) -> Diagram:
    """Numerator closure, oriented by component tracing."""
    return _emit(closure_tangle(t))


def tangle_faces(t: Tangle) -> List[Tuple[End, ...]]:
    """Faces of a closed tangle as orbits of next = ccw-rotate(other end).

    Each dart is a crossing slot; a face orbit lists the darts whose arcs
    bound it, in boundary order.
    """
    for e in t.pair:
        if e[0] != "x":
            raise ValueError("faces are defined for closed tangles")
    darts = sorted(t.pair)
    nxt = {}
    for d in darts:
        _, c, s = t.pair[d]
        nxt[d] = ("x", c, (s + 1) % 4)
    faces = []
    seen = set()
    for d0 in darts:
        if d0 in seen:
            continue
        cyc = []
        d = d0
        while d not in seen:
            seen.add(d)
            cyc.append(d)
            d = nxt[d]
        faces.append(tuple(cyc))
    return faces


def insert_clasp(t: Tangle, dart_a: End, dart_b: End, sign: int, flip: bool = False) -> Tangle:
    """Insert a two-crossing clasp joining the arcs of two darts of one face.

    The darts select the arc sides facing the face; the clasp is the
    [+-2] horizontal twist block laid across it, fusing the two strands.
    ``flip`` swaps the attachment order on the second arc (the two planar
    embeddings of the band).
    """
    out = t.copy()
    a1, a2 = dart_a, out.pair[dart_a]
    b1, b2 = dart_b, out.pair[dart_b]
    if {a1, a2} == {b1, b2}:
        raise ValueError("clasp needs two distinct arcs")
    block = horizontal_twists(2 * sign)
    bmap = out._absorb(block)
    del out.pair[a1]
    del out.pair[a2]
    del out.pair[b1]
    del out.pair[b2]
    if flip:
        b1, b2 = b2, b1
    # West flank of the block to the a-arc halves, east flank to b's.
    for end_tag, cut in (("NW", a1), ("SW", a2), ("NE", b1), ("SE", b2)):
        tgt = out.pair.pop(bmap[end_tag])
        out._join(cut, tgt)
    out.boundary = {}
    return out


def _emit(t: Tangle) -> Diagram:
    """Orient a closed tangle by component tracing and emit a PD diagram."""
    for e in t.pair:
        if e[0] != "x":
            raise ValueError("tangle still has open boundary ends")
    arcs: Dict[End, int] = {}  # head endpoint -> label
    label_at: Dict[End, int] = {}
    nxt = 1
    seen = set()
    for start in sorted(t.pair):
        if start in seen:
            continue
        # Walk the component: arc from cur to pair[cur], then through the
        # crossing to the opposite slot.
        cur = start
        while True:
            far = t.pair[cur]
            seen.add(cur)
            seen.add(far)
            label_at[cur] = nxt
            label_at[far] = nxt
            nxt += 1
            arcs[far] = label_at[cur]
            _, c, s = far
            cur = ("x", c, (s + 2) % 4)
            if cur == start:
                break
    quads = []
    signs = []
    for c in range(t.num_crossings):
        heads = [e for e in (("x", c, s) for s in range(4)) if e in arcs]
        under_in = [e for e in heads if e[2] in (0, 2)]
        over_in = [e for e in heads if e[2] in (1, 3)]
        if len(under_in) != 1 or len(over_in) != 1:
            raise ValueError("inconsistent orientation at a crossing")
        u = under_in[0][2]
        o = over_in[0][2]
        quad = tuple(label_at[("x", c, (u + i) % 4)] for i in range(4))
        quads.append(quad)
        signs.append(1 if o == (u + 1) % 4 else -1)
    order = sorted(range(len(quads)), key=lambda i: quads[i][0])
    quads = [quads[i] for i in order]
    signs = [signs[i] for i in order]
    return Diagram._trusted(quads, signs, t.loops)


def montesinos_diagram(m: MontesinosDesc) -> Diagram:
    """Closure of Q(r1) + Q(r2) + Q(r3)."""
    t = rational_tangle(m.entries[0])
    t = tangle_sum(t, rational_tangle(m.entries[1]))
    t = tangle_sum(t, rational_tangle(m.entries[2]))
    return closure(t)


def pretzel_diagram(*twists: int) -> Diagram:
    """P(t1, ..., tk): numerator closure of summed vertical twist regions."""
    t = vertical_twists(twists[0])
    for n in twists[1:]:
        t = tangle_sum(t, vertical_twists(n))
    return closure(t)


def closed_braid(word: Sequence[int], n_strands: int, axis: Optional[str] = None) -> Diagram:
    """Closure of a braid word (nonzero ints, sign = crossing handedness).

    With ``axis="over-first"`` a ring is threaded around the closure
    arcs: it runs over every strand on the front pass and back under all
    of them, i.e. the braid axis.  Positions never used by the word close
    into split unknot components.
    """
    if any(g == 0 or abs(g) >= n_strands for g in word):
        raise ValueError("braid letters must be nonzero and < n_strands")
    t = Tangle()
    cur: List[Optional[End]] = [None] * n_strands
    first_in: List[Optional[End]] = [None] * n_strands
    for g in word:
        i = abs(g) - 1
        # sigma_i^+1: left strand passes over; variant A has the SE-NW
        # strand over, with compass slots (SW, SE, NE, NW) = (0, 1, 2, 3).
        variant = "A" if g > 0 else "B"
        c = t.num_crossings
        t.num_crossings += 1
        if variant == "A":
            nw, ne, sw, se = 3, 2, 0, 1
        else:
            nw, ne, sw, se = 2, 1, 3, 0
        for pos, slot_in in ((i, nw), (i + 1, ne)):
            end = ("x", c, slot_in)
            if cur[pos] is None:
                first_in[pos] = end
            else:
                t._join(cur[pos], end)
        cur[i] = ("x", c, sw)
        cur[i + 1] = ("x", c, se)

    if axis is None:
        for j in range(n_strands):
            if first_in[j] is None:
                t.loops += 1
            else:
                t._join(cur[j], first_in[j])
        return _emit(t)
    if axis != "over-first":
        raise ValueError("axis must be None or 'over-first'")

    # Thread the closure arcs through the axis ring: front crossings
    # (ring over, strand through slots 0/2) then back crossings (ring
    # under).  Front: slots (N, W, S, E) = (0, 1, 2, 3); back: (E, N, W, S).
    fronts, backs = [], []
    for j in range(n_strands):
        f = t.num_crossings
        t.num_crossings += 1
        fronts.append(f)
        b = t.num_crossings
        t.num_crossings += 1
        backs.append(b)
        t._join(("x", f, 2), ("x", b, 1))
        if first_in[j] is None:
            t._join(("x", b, 3), ("x", f, 0))  # untouched position: bare ring pass
        else:
            t._join(cur[j], ("x", f, 0))
            t._join(("x", b, 3), first_in[j])
    for k in range(n_strands - 1):
        t._join(("x", fronts[k], 3), ("x", fronts[k + 1], 1))
        t._join(("x", backs[k + 1], 2), ("x", backs[k], 0))
    t._join(("x", fronts[-1], 3), ("x", backs[-1], 0))
    t._join(("x", backs[0], 2), ("x", fronts[0], 1))
    return _emit(t)


def two_bridge_diagram(r: ExtendedRational) -> Diagram:
    """Numerator closure of the single rational tangle Q(p/q)."""
    return closure(rational_tangle(r))


@dataclass
class CatalogEntry:
    """One knot of the genus-two clasp-two type-II classification."""

    family: str  # "i" connected sums, "ii" two-bridge, "iii" Montesinos, "iv" exceptional
    name: str
    diagram: Optional[Diagram]
    description: Optional[MontesinosDesc] = None
    params: dict = field(default_factory=dict)
    note: str = ""


def theorem1_catalog(n_bound: int, census=None, exceptional=None) -> List[CatalogEntry]:
    """Generate the classification list up to the Montesinos family bound.

    (i) the four connected sums from the census trefoil and figure-eight;
    (ii) the two-bridge knots via their Montesinos expressions; (iii) the
    six classified Montesinos families over |n| <= n_bound (the 1/(2n)
    families skip n = 0, whose degenerate infinity entry reproduces the
    connected sums already listed); (iv) the twelve exceptional knots
    from the pluggable data file, emitted without diagrams and flagged
    when the file is absent.
    """
    if n_bound < 0:
        raise ValueError("n_bound must be nonnegative")
    if census is None:
        from .census import load_census

        census = load_census()
    entries: List[CatalogEntry] = []

    tre = census["3_1"]
    f8 = census["4_1"]
    sums = [
        ("3_1#3_1", tre.connected_sum(tre)),
        ("3_1#4_1", tre.connected_sum(f8)),
        ("4_1#4_1", f8.connected_sum(f8)),
        ("3_1#mirror(3_1)", tre.connected_sum(tre.mirror())),
    ]
    for name, d in sums:
        entries.append(CatalogEntry("i", name, d))

    two_bridge = [
        ("6_2", MontesinosDesc.parse("-2/3,2,1/2")),
        ("6_3", MontesinosDesc.parse("-2/3,-2,1/2")),
        ("7_7", MontesinosDesc.parse("-2/5,2,1/2")),
        ("mirror(7_6)", MontesinosDesc.parse("-2/5,-2,1/2")),
    ]
    for name, m in two_bridge:
        entries.append(CatalogEntry("ii", name, montesinos_diagram(m), m))

    def fam(r1, r2, r3, n, tag):
        m = MontesinosDesc.of(r1, r2, r3)
        d = montesinos_diagram(m)
        entries.append(CatalogEntry("iii", str(m), d, m, {"n": n, "family": tag}))

    for n in range(-n_bound, n_bound + 1):
        for eps in (1, -1):
            q = 4 * n + eps
            fam(ExtendedRational(1, 2), ExtendedRational(-2, 3), ExtendedRational(2, q), n, f"K(1/2,-2/3,2/(4n{eps:+d}))")
            fam(ExtendedRational(1, 2), ExtendedRational(-2, 5), ExtendedRational(2, q), n, f"K(1/2,-2/5,2/(4n{eps:+d}))")
        if n != 0:
            fam(ExtendedRational(1, 2 * n), ExtendedRational(2, 3), ExtendedRational(-2, 3), n, "K(1/(2n),2/3,-2/3)")
            fam(ExtendedRational(1, 2 * n), ExtendedRational(2, 3), ExtendedRational(-2, 5), n, "K(1/(2n),2/3,-2/5)")
            fam(ExtendedRational(1, 2 * n), ExtendedRational(2, 5), ExtendedRational(-2, 3), n, "K(1/(2n),2/5,-2/3)")
            fam(ExtendedRational(1, 2 * n), ExtendedRational(2, 5), ExtendedRational(-2, 5), n, "K(1/(2n),2/5,-2/5)")

    for e in entries:
        if e.diagram is not None and e.diagram.num_components != 1:
            raise ValueError(f"catalog entry {e.name} is not a knot")

    if exceptional is None:
        from .census import load_exceptional

        exceptional = load_exceptional()
    if exceptional:
        for k in exceptional:
            entries.append(
                CatalogEntry(
                    "iv", k.name, k.diagram, params={"eps1": k.eps1, "eps2": k.eps2}
                )
            )
    else:
        for i in (1, 2, 3):
            for e1 in (1, -1):
                for e2 in (1, -1):
                    entries.append(
                        CatalogEntry(
                            "iv",
                            f"Kex{i}({e1:+d},{e2:+d})",
                            None,
                            params={"eps1": e1, "eps2": e2},
                            note="missing exceptional-knot data file",
                        )
                    )
    return entries


def montesinos_equivalent(m1: MontesinosDesc, m2: MontesinosDesc) -> bool:
    """Decide K(r1,r2,r3) = K(r1',r2',r3') by the classification criterion.

    True iff the multisets of fractional parts agree and the sums agree;
    stated for rational entries only.
    """
    for m in (m1, m2):
        if any(r.is_infinity for r in m.entries):
            raise ValueError("equivalence criterion needs finite entries")
    f1 = sorted(r.as_fraction() % 1 for r in m1.entries)
    f2 = sorted(r.as_fraction() % 1 for r in m2.entries)
    s1 = sum(r.as_fraction() for r in m1.entries)
    s2 = sum(r.as_fraction() for r in m2.entries)
    return f1 == f2 and s1 == s2

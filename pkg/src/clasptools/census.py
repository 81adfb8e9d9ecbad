"""Census loading: named knot diagrams and the exceptional-knot data file.

Census files carry one `name<TAB>PD[...]` entry per line; the
exceptional-knot file carries `name<TAB>eps1<TAB>eps2<TAB>PD[...]`.
Lines starting with `#` are comments.  Loading validates every diagram
and cross-checks that each entry's Conway polynomial has constant term
1, so a corrupted code fails loudly at startup rather than quietly
skewing results.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional

from .diagram import Diagram, DiagramError, parse_pd
from .skein import SkeinEngine


class CensusError(ValueError):
    pass


def _default_path(filename: str) -> Path:
    return Path(str(resources.files("clasptools").joinpath("data", filename)))


def load_census(path: Optional[str] = None, engine: Optional[SkeinEngine] = None) -> Dict[str, Diagram]:
    """Load and validate the named-knot table."""
    p = Path(path) if path else _default_path("census.tsv")
    if not p.exists():
        raise CensusError(f"census file not found: {p}")
    engine = engine or SkeinEngine()
    table: Dict[str, Diagram] = {}
    for lineno, raw in enumerate(p.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise CensusError(f"{p}:{lineno}: expected `name<TAB>PD[...]`")
        name, pd = parts
        if name in table:
            raise CensusError(f"{p}:{lineno}: duplicate census name {name!r}")
        try:
            d = parse_pd(pd)
        except DiagramError as e:
            raise CensusError(f"{p}:{lineno}: entry {name!r} is invalid: {e}") from e
        nabla = engine.conway(d)
        if nabla.coefficient(0, 0) != 1:
            raise CensusError(
                f"{p}:{lineno}: entry {name!r} fails the Conway constant-term check"
            )
        table[name] = d
    return table


@dataclass(frozen=True)
class ExceptionalKnot:
    name: str
    eps1: int
    eps2: int
    diagram: Diagram


def load_exceptional(path: Optional[str] = None) -> List[ExceptionalKnot]:
    """Load the exceptional-knot data file; an absent file yields []."""
    p = Path(path) if path else _default_path("exceptional.tsv")
    if not p.exists():
        return []
    out: List[ExceptionalKnot] = []
    seen = set()
    for lineno, raw in enumerate(p.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise CensusError(
                f"{p}:{lineno}: expected `name<TAB>eps1<TAB>eps2<TAB>PD[...]`"
            )
        name, e1, e2, pd = parts
        if name in seen:
            raise CensusError(f"{p}:{lineno}: duplicate exceptional name {name!r}")
        seen.add(name)
        eps1, eps2 = int(e1), int(e2)
        if eps1 not in (1, -1) or eps2 not in (1, -1):
            raise CensusError(f"{p}:{lineno}: clasp signs must be +1 or -1")
        try:
            d = parse_pd(pd)
        except DiagramError as e:
            raise CensusError(f"{p}:{lineno}: entry {name!r} is invalid: {e}") from e
        if d.num_components != 1:
            raise CensusError(f"{p}:{lineno}: exceptional entry {name!r} is not a knot")
        out.append(ExceptionalKnot(name, eps1, eps2, d))
    return out


CORE_NAMES = ("3_1", "4_1", "6_2", "6_3", "7_6", "7_7")
COROLLARY12_NAMES = ("11n74", "11n116", "11n142", "12n462", "12n838")

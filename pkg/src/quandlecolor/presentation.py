"""Quandle presentations from braid-word relations, and coloring enumeration.

A relation ``Q(w)(x_a) = Q(w)(x_b)`` holds for a generator assignment when the
two positions agree after the assignment is pushed through ``w``.  A
coloring is an assignment satisfying every relation; it extends uniquely to
a homomorphism out of the presented quandle.
"""

from __future__ import annotations

import dataclasses
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import kernels
from .braid import BraidParseError, BraidWord, act_evaluated, format_braid, parse_braid, word
from .quandle import FiniteQuandle
from .terms import Assignment

CHUNK_SIZE = 1 << 16


class PresentationError(ValueError):
    pass


class ProfileViolation(RuntimeError):
    """A coloring broke ``x1 = x2`` or ``x3 = x4``; the relations are mis-encoded."""


@dataclasses.dataclass(frozen=True)
class Relation:
    """``Q(word)(x_left) = Q(word)(x_right)``."""

    word: BraidWord
    left: int
    right: int

    def __post_init__(self):
        n = self.word.rank
        for g in (self.left, self.right):
            if not 1 <= g <= n:
                raise PresentationError(f"generator index {g} outside 1..{n}")


@dataclasses.dataclass(frozen=True)
class Presentation:
    rank: int
    relations: tuple[Relation, ...] = ()
    name: str | None = dataclasses.field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        for r in self.relations:
            if r.word.rank != self.rank:
                raise PresentationError(
                    f"relation word has rank {r.word.rank}, presentation rank is {self.rank}")


@dataclasses.dataclass(frozen=True)
class ColoringReport:
    count: int
    colorings: tuple[tuple[int, ...], ...]
    trivial_count: int


def _rel(rank: int, left: int, right: int, *powers) -> Relation:
    return Relation(word(rank, *powers), left, right)


def chart_T(k: int) -> Presentation:
    """Eight relations of the chart ``T_k`` (Hurwitz arcs in the order the charts fix)."""
    if k < 1:
        raise PresentationError(f"T_k needs k >= 1, got {k}")
    head = (2, -(k + 1))
    tail = (2, 2)
    w4 = ((2, -(k + 1)), (3, 1), (1, 1), tail)
    rels = [
        _rel(4, 1, 2),
        _rel(4, 1, 2, head, (1, 1), tail),
        _rel(4, 3, 4, (2, -2), (1, 1), tail),
        _rel(4, 3, 4, *w4),
        _rel(4, 1, 2, *w4),
        _rel(4, 1, 2, (2, -2), (3, 1), tail),
        _rel(4, 3, 4, head, (3, 1), tail),
        _rel(4, 3, 4),
    ]
    return Presentation(4, tuple(rels), f"T_{k}")


def chart_T_star(k: int) -> Presentation:
    """``T_k`` with labels 1 and 3 exchanged."""
    if k < 1:
        raise PresentationError(f"T*_k needs k >= 1, got {k}")
    head = (2, -(k + 1))
    tail = (2, 2)
    w4 = ((2, -(k + 1)), (1, 1), (3, 1), tail)
    rels = [
        _rel(4, 3, 4),
        _rel(4, 3, 4, head, (3, 1), tail),
        _rel(4, 1, 2, (2, -2), (3, 1), tail),
        _rel(4, 1, 2, *w4),
        _rel(4, 3, 4, *w4),
        _rel(4, 3, 4, (2, -2), (1, 1), tail),
        _rel(4, 1, 2, head, (1, 1), tail),
        _rel(4, 1, 2),
    ]
    return Presentation(4, tuple(rels), f"T*_{k}")


def chart_T0() -> Presentation:
    w4 = ((2, -1), (3, 1), (1, 1), (2, -1))
    rels = [
        _rel(4, 1, 2),
        _rel(4, 2, 3, (1, 1), (2, -1)),
        _rel(4, 3, 4, *w4),
        _rel(4, 1, 2, *w4),
        _rel(4, 2, 3, (3, 1), (2, -1)),
        _rel(4, 3, 4),
    ]
    return Presentation(4, tuple(rels), "T_0")


def check_relation(r: Relation, values: Assignment, q: FiniteQuandle) -> bool:
    if len(values) != r.word.rank:
        raise PresentationError(
            f"assignment has {len(values)} values, relation rank is {r.word.rank}")
    v = act_evaluated(r.word, values, q)
    return v[r.left - 1] == v[r.right - 1]


def is_coloring(p: Presentation, values: Assignment, q: FiniteQuandle) -> bool:
    return all(check_relation(r, values, q) for r in p.relations)


def pack_relations(p: Presentation):
    """Flatten relations into the array layout the kernels consume."""
    offsets = [0]
    gens, signs = [], []
    for r in p.relations:
        g, s = r.word.kernel_arrays()
        gens.append(g)
        signs.append(s)
        offsets.append(offsets[-1] + len(g))
    empty = np.zeros(0, dtype=np.int64)
    return (
        np.array(offsets, dtype=np.int64),
        np.concatenate(gens) if gens else empty,
        np.concatenate(signs) if signs else empty,
        np.array([r.left - 1 for r in p.relations], dtype=np.int64),
        np.array([r.right - 1 for r in p.relations], dtype=np.int64),
    )


def _assignment_block(start: int, stop: int, order: int, rank: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    return np.stack(np.unravel_index(idx, (order,) * rank), axis=1).astype(np.int64)


def count_colorings(p: Presentation, q: FiniteQuandle, *, workers: int | None = None,
                    backend: str | None = None, chunk_size: int = CHUNK_SIZE) -> ColoringReport:
    """Enumerate all ``|Q|**rank`` assignments and keep those satisfying every relation.

    Colorings come back in lexicographic order with ``x1`` outermost,
    independent of ``workers``.
    """
    kernel = kernels.get_kernel(backend)
    packed = pack_relations(p)
    total = q.order ** p.rank
    if workers is not None and workers > 1:
        chunk_size = max(1, min(chunk_size, math.ceil(total / workers)))
    bounds = [(s, min(s + chunk_size, total)) for s in range(0, total, chunk_size)]

    def run(bound):
        block = _assignment_block(*bound, q.order, p.rank)
        return block[kernel(block, *packed, q.op, q.inv)] + 1

    if workers is not None and workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, bounds))
    else:
        parts = [run(b) for b in bounds]

    found = np.concatenate(parts) if parts else np.zeros((0, p.rank), dtype=np.int64)
    colorings = tuple(tuple(int(v) for v in row) for row in found)
    trivial = int(np.count_nonzero((found == found[:, :1]).all(axis=1))) if len(found) else 0
    return ColoringReport(len(colorings), colorings, trivial)


def coloring_profile(p: Presentation, q: FiniteQuandle,
                     report: ColoringReport | None = None) -> frozenset[tuple[int, int]]:
    """Pairs ``(c(x1), c(x3))`` realized by colorings of a rank-4 presentation."""
    if p.rank != 4:
        raise PresentationError("coloring_profile needs a rank-4 presentation")
    if report is None:
        report = count_colorings(p, q)
    pairs = set()
    for c in report.colorings:
        if c[0] != c[1] or c[2] != c[3]:
            raise ProfileViolation(f"coloring {c} of {p.name or 'presentation'} "
                                   "breaks x1 = x2 or x3 = x4")
        pairs.add((c[0], c[2]))
    return frozenset(pairs)


def parse_presentation(text: str, name: str | None = None) -> Presentation:
    """Parse ``rank <n>`` followed by ``rel <a> <b> : <braid text>`` lines."""
    rank = None
    rels: list[Relation] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if rank is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "rank":
                raise PresentationError(f"line {lineno}: expected 'rank <n>'")
            try:
                rank = int(parts[1])
            except ValueError:
                raise PresentationError(f"line {lineno}: bad rank {parts[1]!r}") from None
            if rank < 1:
                raise PresentationError(f"line {lineno}: rank must be positive")
            continue
        head, sep, braid_text = line.partition(":")
        parts = head.split()
        if not sep or len(parts) != 3 or parts[0] != "rel":
            raise PresentationError(f"line {lineno}: expected 'rel <a> <b> : <braid>'")
        try:
            a, b = int(parts[1]), int(parts[2])
            rels.append(Relation(parse_braid(braid_text, rank), a, b))
        except (ValueError, BraidParseError) as exc:
            raise PresentationError(f"line {lineno}: {exc}") from None
    if rank is None:
        raise PresentationError("missing 'rank <n>' line")
    return Presentation(rank, tuple(rels), name)


def load_presentation(path: str | Path) -> Presentation:
    path = Path(path)
    return parse_presentation(path.read_text(), name=path.stem)


def format_presentation(p: Presentation) -> str:
    lines = [f"rank {p.rank}"]
    for r in p.relations:
        lines.append(f"rel {r.left} {r.right} : {format_braid(r.word)}".rstrip())
    return "\n".join(lines) + "\n"


def permuted(p: Presentation, order: Sequence[int]) -> Presentation:
    return Presentation(p.rank, tuple(p.relations[i] for i in order), p.name)

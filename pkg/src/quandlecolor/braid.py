"""Braid words and their action on free-quandle generators.

A word is stored in the order it is written.  The action extends ``Q(b)`` to
``Q(sigma_i b)``, so the rightmost letter is applied first.
"""

from __future__ import annotations

import dataclasses
import re

import numpy as np

from .quandle import FiniteQuandle
from .terms import Assignment, Generator, InvOp, Op, Term, evaluate

Letter = tuple[int, int]

_ATOM = re.compile(r"s(\d+)(?:\^([+-]?\d+))?")


class BraidParseError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class BraidWord:
    rank: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise BraidParseError(f"rank must be positive, got {self.rank}")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 1 <= i < self.rank:
                raise BraidParseError(f"generator s{i} outside s1..s{self.rank - 1}")
            if e not in (1, -1):
                raise BraidParseError(f"letter sign must be +1 or -1, got {e}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.rank != self.rank:
            raise ValueError("cannot multiply braid words of different rank")
        return BraidWord(self.rank, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.rank, tuple((i, -e) for i, e in reversed(self.letters)))

    def __str__(self):
        return format_braid(self)

    def kernel_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """0-indexed generator positions and signs in application order."""
        gens = np.array([i - 1 for i, _ in reversed(self.letters)], dtype=np.int64)
        signs = np.array([e for _, e in reversed(self.letters)], dtype=np.int64)
        return gens, signs


def word(rank: int, *powers: tuple[int, int]) -> BraidWord:
    """Build a word from ``(generator, exponent)`` pairs, e.g. ``word(4, (2, -2), (1, 1))``."""
    letters: list[Letter] = []
    for i, e in powers:
        letters.extend([(i, 1 if e > 0 else -1)] * abs(e))
    return BraidWord(rank, tuple(letters))


def parse_braid(text: str, rank: int) -> BraidWord:
    """Parse whitespace-separated atoms ``s<i>`` or ``s<i>^<e>``; empty text is the identity."""
    powers = []
    for tok in text.split():
        m = _ATOM.fullmatch(tok)
        if m is None:
            raise BraidParseError(f"malformed braid token {tok!r}")
        i = int(m.group(1))
        if not 1 <= i < rank:
            raise BraidParseError(f"generator s{i} outside s1..s{rank - 1} for rank {rank}")
        e = int(m.group(2)) if m.group(2) is not None else 1
        powers.append((i, e))
    return word(rank, *powers)


def format_braid(w: BraidWord) -> str:
    """Compact text for ``w``, grouping runs of equal letters into powers."""
    out = []
    run_letter, run = None, 0
    for letter in list(w.letters) + [None]:
        if letter == run_letter:
            run += 1
            continue
        if run_letter is not None:
            i, e = run_letter
            p = e * run
            out.append(f"s{i}" if p == 1 else f"s{i}^{p}")
        run_letter, run = letter, 1
    return " ".join(out)


@dataclasses.dataclass(frozen=True)
class GeneratorImage:
    """The tuple ``(Q(b)(x_1), ..., Q(b)(x_n))``."""

    rank: int
    terms: tuple[Term, ...]


def act(w: BraidWord) -> GeneratorImage:
    terms: list[Term] = [Generator(j) for j in range(1, w.rank + 1)]
    for i, e in reversed(w.letters):
        a, b = terms[i - 1], terms[i]
        if e > 0:
            terms[i - 1], terms[i] = InvOp(b, a), a
        else:
            terms[i - 1], terms[i] = b, Op(a, b)
    return GeneratorImage(w.rank, tuple(terms))


def act_evaluated(w: BraidWord, values: Assignment, q: FiniteQuandle) -> tuple[int, ...]:
    """Evaluated images ``c(Q(w)(x_j))`` computed by threading elements through the word."""
    if len(values) != w.rank:
        raise ValueError(f"assignment has {len(values)} values, braid rank is {w.rank}")
    v = []
    for x in values:
        if not 1 <= x <= q.order:
            raise ValueError(f"assignment value {x} outside 1..{q.order}")
        v.append(int(x) - 1)
    op, inv = q.op, q.inv
    for i, e in reversed(w.letters):
        a, b = v[i - 1], v[i]
        if e > 0:
            v[i - 1], v[i] = int(inv[b, a]), a
        else:
            v[i - 1], v[i] = b, int(op[a, b])
    return tuple(x + 1 for x in v)


def evaluate_image(image: GeneratorImage, values: Assignment, q: FiniteQuandle) -> tuple[int, ...]:
    return tuple(evaluate(t, values, q) for t in image.terms)

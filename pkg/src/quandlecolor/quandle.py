"""Finite quandles stored as operation tables.

Elements are the integers ``1..N`` at every public boundary.  Internally the
tables are 0-indexed ``int64`` arrays so they can be handed straight to the
enumeration kernels.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Mapping, Sequence
from pathlib import Path

import numpy as np

ElementMap = Sequence[int] | Mapping[int, int]


class QuandleError(ValueError):
    """Base class for invalid quandle tables and bad element arguments."""


class AxiomError(QuandleError):
    """The table parses but is not a quandle; ``witness`` locates the first failure."""

    witness: tuple[int, ...] = ()


class EntryRangeError(AxiomError):
    def __init__(self, row: int, col: int, value: int, order: int):
        self.witness = (row, col, value)
        super().__init__(f"entry ({row},{col}) = {value} outside 1..{order}")


class IdempotenceError(AxiomError):
    def __init__(self, a: int, value: int):
        self.witness = (a,)
        super().__init__(f"axiom (i) fails: {a}*{a} = {value}")


class RightInvertibilityError(AxiomError):
    def __init__(self, col: int, x: int, y: int):
        self.witness = (col,)
        self.collision = (x, y)
        super().__init__(f"axiom (ii) fails: right translation by {col} is not a bijection "
                         f"({x}*{col} = {y}*{col})")


class DistributivityError(AxiomError):
    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(f"axiom (iii) fails at (a,b,c) = ({a},{b},{c})")


@dataclasses.dataclass(frozen=True, eq=False)
class FiniteQuandle:
    """A validated quandle on ``{1, ..., order}``.

    ``op[x, y]`` is the 0-indexed product and ``inv[b, a]`` the 0-indexed
    ``x`` with ``x * a = b``.  Build instances with :func:`validate` or
    :func:`make_q_n`; the constructor does not check the axioms.
    """

    order: int
    op: np.ndarray
    inv: np.ndarray

    @property
    def op_table(self) -> np.ndarray:
        """1-indexed operation table, ``op_table[x-1, y-1] == x*y``."""
        return self.op + 1

    @property
    def inv_table(self) -> np.ndarray:
        return self.inv + 1

    def __eq__(self, other):
        if not isinstance(other, FiniteQuandle):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.op, other.op)

    def __hash__(self):
        return hash((self.order, self.op.tobytes()))

    def __repr__(self):
        return f"FiniteQuandle(order={self.order})"


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.flags.writeable = False
    return a


def validate(table) -> FiniteQuandle:
    """Check the three quandle axioms on a 1-indexed ``N x N`` table.

    Raises the first failure found, checking entry range, then idempotence,
    right-invertibility and self-distributivity, each scanned in
    lexicographic order.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise QuandleError(f"table must be a non-empty square array, got shape {t.shape}")
    n = t.shape[0]
    if not np.issubdtype(t.dtype, np.integer):
        raise QuandleError("table entries must be integers")
    bad = np.argwhere((t < 1) | (t > n))
    if len(bad):
        r, c = bad[0]
        raise EntryRangeError(int(r) + 1, int(c) + 1, int(t[r, c]), n)

    op = t.astype(np.int64) - 1
    diag = op[np.arange(n), np.arange(n)]
    bad = np.flatnonzero(diag != np.arange(n))
    if len(bad):
        a = int(bad[0])
        raise IdempotenceError(a + 1, int(diag[a]) + 1)

    inv = np.full((n, n), -1, dtype=np.int64)
    for a in range(n):
        col = op[:, a]
        seen = np.full(n, -1, dtype=np.int64)
        for x in range(n):
            if seen[col[x]] >= 0:
                raise RightInvertibilityError(a + 1, int(seen[col[x]]) + 1, x + 1)
            seen[col[x]] = x
        inv[:, a] = seen

    # lhs[a,b,c] = (a*b)*c, rhs[a,b,c] = (a*c)*(b*c)
    cols = np.arange(n)
    lhs = op[op[:, :, None], cols[None, None, :]]
    rhs = op[op[:, None, :], op[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        a, b, c = (int(v) + 1 for v in bad[0])
        raise DistributivityError(a, b, c)

    return FiniteQuandle(n, _frozen(op), _frozen(inv))


def make_q_n(n: int) -> FiniteQuandle:
    """The quandle ``Q_N``: right multiplication by ``N`` cycles ``1 -> 2 -> ... -> N-1 -> 1``
    and fixes ``N``; every other right multiplication is the identity."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 3:
        raise QuandleError(f"Q_N needs an integer N >= 3, got {n!r}")
    n = int(n)
    x = np.arange(1, n + 1)
    table = np.repeat(x[:, None], n, axis=1)
    last = x + 1
    last[n - 2] = 1
    last[n - 1] = n
    table[:, n - 1] = last
    return validate(table)


def trivial_quandle(n: int) -> FiniteQuandle:
    """``x * y = x`` on ``n`` elements."""
    return validate(np.repeat(np.arange(1, n + 1)[:, None], n, axis=1))


def _check_element(q: FiniteQuandle, x) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, np.integer)) or not 1 <= x <= q.order:
        raise QuandleError(f"element {x!r} outside 1..{q.order}")
    return int(x)


def quandle_op(q: FiniteQuandle, x: int, y: int) -> int:
    """``x * y``."""
    return int(q.op[_check_element(q, x) - 1, _check_element(q, y) - 1]) + 1


def quandle_inv_op(q: FiniteQuandle, b: int, a: int) -> int:
    """The unique ``x`` with ``x * a == b``."""
    return int(q.inv[_check_element(q, b) - 1, _check_element(q, a) - 1]) + 1


def _images(f: ElementMap, n: int) -> np.ndarray:
    if isinstance(f, Mapping):
        return np.array([f[x] for x in range(1, n + 1)], dtype=np.int64)
    images = np.asarray(f, dtype=np.int64)
    if images.shape != (n,):
        raise QuandleError(f"element map must have {n} images, got shape {images.shape}")
    return images


def is_homomorphism(q: FiniteQuandle, target: FiniteQuandle, f: ElementMap) -> bool:
    """Whether ``f(x*y) == f(x)*f(y)`` for every pair.

    ``f`` is either a mapping ``x -> f(x)`` or a sequence whose ``x-1`` entry
    is ``f(x)``.
    """
    images = _images(f, q.order) - 1
    if images.min() < 0 or images.max() >= target.order:
        raise QuandleError(f"element map leaves 1..{target.order}")
    lhs = images[q.op]
    rhs = target.op[images[:, None], images[None, :]]
    return bool(np.array_equal(lhs, rhs))


def shift_map(q: FiniteQuandle) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The cyclic shift automorphism of ``Q_N`` and its inverse, as image tuples.

    ``f`` sends ``x -> x+1`` for ``x < N-1``, ``N-1 -> 1`` and fixes ``N``.
    """
    n = q.order
    if n < 3 or q != make_q_n(n):
        raise QuandleError("shift_map is only defined on Q_N")
    f = tuple(list(range(2, n)) + [1, n])
    f_inv = tuple([n - 1] + list(range(1, n - 1)) + [n])
    if not (is_homomorphism(q, q, f) and is_homomorphism(q, q, f_inv)):
        raise AssertionError("shift map failed the homomorphism check")
    return f, f_inv


def format_table(q: FiniteQuandle) -> str:
    """Serialize in the table file format: ``N`` then ``N`` rows."""
    rows = [" ".join(str(v) for v in row) for row in q.op_table]
    return "\n".join([str(q.order), *rows]) + "\n"


def parse_table(text: str) -> np.ndarray:
    """Parse the table file format into a 1-indexed array without validating axioms."""
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise QuandleError("empty quandle table file")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise QuandleError(f"line {lineno}: expected the order N, got {head!r}") from None
    if n < 1:
        raise QuandleError(f"line {lineno}: order must be positive")
    body = lines[1:]
    if len(body) != n:
        raise QuandleError(f"expected {n} table rows, found {len(body)}")
    rows = []
    for lineno, ln in body:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise QuandleError(f"line {lineno}: non-integer entry") from None
        if len(row) != n:
            raise QuandleError(f"line {lineno}: expected {n} entries, found {len(row)}")
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def load_quandle(path: str | Path) -> FiniteQuandle:
    return validate(parse_table(Path(path).read_text()))

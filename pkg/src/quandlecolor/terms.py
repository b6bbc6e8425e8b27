"""Expression trees for elements of the free quandle on ``x_1 .. x_n``.

Terms are immutable and may share subtrees; the braid action builds DAGs
whose tree expansion is exponential in word length.  Every traversal here is
iterative, and evaluation visits each shared node once, so deep or heavily
shared terms are handled without recursion.
"""

from __future__ import annotations

from collections.abc import Sequence

from .quandle import FiniteQuandle

Assignment = Sequence[int]


class Term:
    __slots__ = ("_hash", "size")

    def __eq__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        return _structurally_equal(self, other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.size > 200:
            return f"<{type(self).__name__} term of size {self.size}>"
        return f"{type(self).__name__}[{render(self)}]"

    def __mul__(self, other: Term) -> Op:
        return Op(self, other)


class Generator(Term):
    __slots__ = ("index",)

    def __init__(self, index: int):
        if isinstance(index, bool) or not isinstance(index, int) or index < 1:
            raise ValueError(f"generator index must be a positive integer, got {index!r}")
        self.index = index
        self.size = 1
        self._hash = hash(("x", index))


class _Binary(Term):
    __slots__ = ("left", "right")
    _tag = ""

    def __init__(self, left: Term, right: Term):
        if not (isinstance(left, Term) and isinstance(right, Term)):
            raise TypeError("operands must be terms")
        self.left = left
        self.right = right
        self.size = 1 + left.size + right.size
        self._hash = hash((self._tag, left._hash, right._hash))


class Op(_Binary):
    """``left * right``."""

    __slots__ = ()
    _tag = "*"


class InvOp(_Binary):
    """``left *̄ right``: the element whose product with ``right`` is ``left``."""

    __slots__ = ()
    _tag = "~"


def _structurally_equal(s: Term, t: Term) -> bool:
    stack = [(s, t)]
    seen: set[tuple[int, int]] = set()
    while stack:
        a, b = stack.pop()
        if a is b:
            continue
        if type(a) is not type(b) or a._hash != b._hash or a.size != b.size:
            return False
        key = (id(a), id(b))
        if key in seen:
            continue
        seen.add(key)
        if isinstance(a, Generator):
            if a.index != b.index:
                return False
        else:
            stack.append((a.right, b.right))
            stack.append((a.left, b.left))
    return True


def _postorder(t: Term):
    """Yield each distinct node once, children before parents."""
    done: set[int] = set()
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in done:
            continue
        if expanded or isinstance(node, Generator):
            done.add(id(node))
            yield node
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))


def max_generator(t: Term) -> int:
    return max(node.index for node in _postorder(t) if isinstance(node, Generator))


def evaluate(t: Term, values: Assignment, q: FiniteQuandle) -> int:
    """Value of ``t`` under the homomorphism sending ``x_i`` to ``values[i-1]``."""
    rank = len(values)
    for v in values:
        if not 1 <= v <= q.order:
            raise ValueError(f"assignment value {v} outside 1..{q.order}")
    op, inv = q.op, q.inv
    memo: dict[int, int] = {}
    for node in _postorder(t):
        if isinstance(node, Generator):
            if node.index > rank:
                raise IndexError(f"x{node.index} not covered by an assignment of rank {rank}")
            memo[id(node)] = int(values[node.index - 1]) - 1
        else:
            a, b = memo[id(node.left)], memo[id(node.right)]
            memo[id(node)] = int(op[a, b] if isinstance(node, Op) else inv[a, b])
    return memo[id(t)] + 1


def term_size(t: Term) -> int:
    """Node count of the tree expansion (shared subtrees counted every time)."""
    return t.size


def render(t: Term) -> str:
    """Fully parenthesized text, ``*`` for the operation and ``~`` for its inverse.

    Output length is the tree size, so heavily shared terms render large.
    """
    out: list[str] = []
    stack: list = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, str):
            out.append(node)
        elif isinstance(node, Generator):
            out.append(f"x{node.index}")
        else:
            out.append("(")
            stack.extend((")", node.right, node._tag, node.left))
    return "".join(out)


def parse_term(text: str) -> Term:
    """Inverse of :func:`render`."""
    pos = 0
    s = "".join(text.split())

    def fail(msg):
        raise ValueError(f"bad term at offset {pos}: {msg}")

    # explicit stack: frames are [pending_left, operator]
    stack: list[list] = []
    result = None
    while True:
        if pos >= len(s):
            fail("unexpected end of input")
        ch = s[pos]
        if ch == "(":
            stack.append([None, None])
            pos += 1
            continue
        if ch == "x":
            j = pos + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            if j == pos + 1:
                fail("generator without index")
            node: Term = Generator(int(s[pos + 1:j]))
            pos = j
        else:
            fail(f"unexpected {ch!r}")
        while True:
            if not stack:
                result = node
                break
            frame = stack[-1]
            if frame[0] is None:
                frame[0] = node
                if pos >= len(s) or s[pos] not in "*~":
                    fail("expected '*' or '~'")
                frame[1] = s[pos]
                pos += 1
                break
            if pos >= len(s) or s[pos] != ")":
                fail("expected ')'")
            pos += 1
            stack.pop()
            node = Op(frame[0], node) if frame[1] == "*" else InvOp(frame[0], node)
        if result is not None:
            break
    if pos != len(s):
        fail("trailing input")
    return result

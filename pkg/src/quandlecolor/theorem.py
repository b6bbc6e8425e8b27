"""Closed-form coloring counts for the charts ``T_0``, ``T_k`` and ``T*_k`` over ``Q_N``.

Each row pairs a chart and quandle with the count the closed form predicts
and the count the enumerator finds.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Iterator

from .presentation import chart_T, chart_T0, chart_T_star, count_colorings
from .quandle import make_q_n


@dataclasses.dataclass(frozen=True)
class TheoremRow:
    case: str
    chart: str
    quandle: str
    expected: int
    computed: int

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def as_dict(self) -> dict:
        return {"case": self.case, "chart": self.chart, "quandle": self.quandle,
                "expected": self.expected, "computed": self.computed, "pass": self.passed}


def chart_from_token(token: str):
    """``t0``, ``t:<k>`` or ``tstar:<k>``."""
    if token == "t0":
        return chart_T0()
    kind, _, k = token.partition(":")
    if kind in ("t", "tstar") and k.lstrip("-").isdigit():
        return chart_T(int(k)) if kind == "t" else chart_T_star(int(k))
    raise ValueError(f"unknown chart {token!r}")


def theorem_cases(max_k: int = 5, max_n: int = 6) -> Iterator[tuple[str, str, int, int]]:
    """Yield ``(case, chart token, N, expected count)``.

    (a) ``T_0`` over ``Q_N``; (b) ``T_2k``/``T*_2k`` over ``Q_N``; (c)
    ``T_{2k-1}``/``T*_{2k-1}`` over ``Q_{k+2}``; (d) ``T_{2l-1}``/``T*_{2l-1}``
    over ``Q_{k+2}`` for ``1 <= l < k``.
    """
    for n in range(3, max_n + 1):
        yield "a", "t0", n, (n - 1) ** 2 + 1
    for k in range(1, max_k + 1):
        for n in range(3, max_n + 1):
            for kind in ("t", "tstar"):
                yield "b", f"{kind}:{2 * k}", n, n
    for k in range(1, max_k + 1):
        for kind in ("t", "tstar"):
            yield "c", f"{kind}:{2 * k - 1}", k + 2, (k + 2) ** 2
    for k in range(2, max_k + 1):
        for ell in range(1, k):
            for kind in ("t", "tstar"):
                yield "d", f"{kind}:{2 * ell - 1}", k + 2, (k + 1) ** 2 + 1


def theorem_rows(max_k: int = 5, max_n: int = 6, *, workers: int | None = None) -> list[TheoremRow]:
    rows = []
    quandles = {}
    for case, chart, n, expected in theorem_cases(max_k, max_n):
        q = quandles.setdefault(n, make_q_n(n))
        computed = count_colorings(chart_from_token(chart), q, workers=workers).count
        rows.append(TheoremRow(case, chart, f"qN:{n}", expected, computed))
    return rows

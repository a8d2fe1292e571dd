"""Bottom-row recursion for boolean numbers; an oracle against the triangle.

beta(L) = 1 for a single row, and otherwise

    beta(L) = Lr * beta(head) + sum_{l=1..Lr} C(Lr+1, l+1) * beta(head[-l])

where head drops the bottom row and head[-l] deletes l full-height columns
from it.  Any zero row short-circuits to 0 (the graph has an isolated
vertex).  Evaluation uses an explicit stack so transposed inputs with
thousands of rows cannot exhaust call depth.
"""

from __future__ import annotations

import math

from .shapes import FerrersShape


def _children(rows: tuple[int, ...]) -> list[tuple[int, ...]]:
    head = rows[:-1]
    bottom = rows[-1]
    subs = [head]
    for ell in range(1, bottom + 1):
        subs.append(tuple(x - ell for x in head))
    return subs


def beta_row_recursion(shape: FerrersShape) -> int:
    if shape.rows[-1] == 0:
        return 0
    # memo keys are shapes with all rows positive; zero-row subshapes are
    # resolved to 0 on sight and never stored
    memo: dict[tuple[int, ...], int] = {}
    stack = [shape.rows]
    while stack:
        rows = stack[-1]
        if rows in memo:
            stack.pop()
            continue
        if len(rows) == 1:
            memo[rows] = 1
            stack.pop()
            continue
        subs = _children(rows)
        pending = [s for s in subs if s[-1] != 0 and s not in memo]
        if pending:
            stack.extend(pending)
            continue
        bottom = rows[-1]
        total = bottom * memo[subs[0]]
        for ell in range(1, bottom + 1):
            sub = subs[ell]
            if sub[-1] != 0:
                total += math.comb(bottom + 1, ell + 1) * memo[sub]
        memo[rows] = total
        stack.pop()
    return memo[shape.rows]

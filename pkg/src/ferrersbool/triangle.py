"""Coefficient-triangle engine for boolean numbers of Ferrers shapes.

For a shape with rows L1 >= ... >= Lr the triangle starts from (-1, 1) and
row i follows from row i-1 with exponent d_i = L_{i-1} - L_i:

    c(i, j) = j * (j-1)**d_i * c(i-1, j-1)  -  (j+1) * j**d_i * c(i-1, j)

with the convention 0**0 = 1 (Python's pow already honours it).  The boolean
number is sum_j c(r, j) * j**Lr, again with 0**0 = 1, so a zero bottom row
yields the row sum, which is zero.

Everything here is exact integer arithmetic; the entries grow exponentially
with the row index, so fixed-width arithmetic is never used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .shapes import FerrersShape

FIRST_ROW: tuple[int, ...] = (-1, 1)


@dataclass(frozen=True)
class CoefficientRow:
    """Row i of the triangle: values c(i, 0..i)."""

    index: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.index + 1:
            raise ValueError("row i must have i+1 entries")


@dataclass(frozen=True)
class Triangle:
    """All rows of the coefficient triangle for one shape."""

    shape: FerrersShape
    rows: tuple[CoefficientRow, ...]

    def last_row(self) -> CoefficientRow:
        return self.rows[-1]


@dataclass(frozen=True)
class CostReport:
    """Observed vs. closed-form multiplication count of the instrumented run."""

    multiplications: int
    predicted: int


def next_values(prev: tuple[int, ...], d: int) -> tuple[int, ...]:
    """Apply the row update with exponent d; entries outside the row are zero."""
    if d < 0:
        raise ValueError("difference exponent must be >= 0")
    out = []
    for j in range(len(prev) + 1):
        left = prev[j - 1] if j >= 1 else 0
        right = prev[j] if j < len(prev) else 0
        out.append(j * (j - 1) ** d * left - (j + 1) * j**d * right)
    return tuple(out)


def next_row(prev: CoefficientRow, d: int) -> CoefficientRow:
    return CoefficientRow(prev.index + 1, next_values(prev.values, d))


def iter_row_values(shape: FerrersShape) -> Iterator[tuple[int, ...]]:
    """Stream row values 1..r without materializing the whole triangle."""
    row = FIRST_ROW
    yield row
    for d in shape.differences():
        row = next_values(row, d)
        yield row


def final_row_values(shape: FerrersShape) -> tuple[int, ...]:
    row = FIRST_ROW
    for d in shape.differences():
        row = next_values(row, d)
    return row


def coefficient_triangle(shape: FerrersShape) -> Triangle:
    rows = tuple(
        CoefficientRow(i, values) for i, values in enumerate(iter_row_values(shape), start=1)
    )
    return Triangle(shape, rows)


def beta_triangle(shape: FerrersShape) -> int:
    """Boolean number via the triangle: sum_j c(r, j) * j**Lr with 0**0 = 1."""
    bottom = shape.rows[-1]
    return sum(c * j**bottom for j, c in enumerate(final_row_values(shape)))


def predicted_cost(shape: FerrersShape) -> int:
    """Closed-form multiplication count: 2 * sum_{i=2..r} (i+1) * (d_i + 1)."""
    return 2 * sum(
        (i + 1) * (d + 1) for i, d in enumerate(shape.differences(), start=2)
    )


def _pow_counted(base: int, exp: int) -> tuple[int, int]:
    # Iterated multiplication, the accounting the cost recursion assumes:
    # exp - 1 multiplications for exp >= 1, none for exp in {0, 1}.
    if exp == 0:
        return 1, 0
    result = base
    for _ in range(exp - 1):
        result *= base
    return result, exp - 1


def instrumented_gamma(shape: FerrersShape) -> tuple[CoefficientRow, CostReport]:
    """Final triangle row plus the multiplication census of computing it.

    Each update term a * b**d * c is charged d+1 multiplications when d >= 1
    (d-1 for the power, two for the products) and a single multiplication
    when d = 0, which makes every row i cost exactly 2*(i+1)*(d_i+1).
    """
    muls = 0
    row = FIRST_ROW
    for d in shape.differences():
        new = []
        for j in range(len(row) + 1):
            left = row[j - 1] if j >= 1 else 0
            right = row[j] if j < len(row) else 0
            p1, extra1 = _pow_counted(j - 1, d)
            term1 = j * p1 * left
            muls += extra1 + (2 if d >= 1 else 1)
            p2, extra2 = _pow_counted(j, d)
            term2 = (j + 1) * p2 * right
            muls += extra2 + (2 if d >= 1 else 1)
            new.append(term1 - term2)
        row = tuple(new)
    report = CostReport(multiplications=muls, predicted=predicted_cost(shape))
    return CoefficientRow(len(row) - 1, row), report

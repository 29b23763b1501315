"""Partition combinatorics: enumeration, hooks, contents, Frobenius coordinates.

Partitions are plain tuples of weakly decreasing positive integers, e.g.
``(3, 1, 1)``; the empty partition is ``()``.  Cells are 1-based ``(i, j)``
pairs, row ``i`` and column ``j``, and the content of a cell is ``j - i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

Partition = tuple

EMPTY: Partition = ()


def check_partition(parts) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p < 1 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order (largest part first)."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def enumerate_up_to(d: int) -> list[Partition]:
    """All partitions of weight 0..d, grade ascending then reverse-lex."""
    if d < 0:
        raise ValueError("d must be >= 0")
    out: list[Partition] = []
    for n in range(d + 1):
        out.extend(partitions_of(n))
    return out


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def cells(lam: Partition) -> list[tuple[int, int]]:
    return [(i, j) for i, part in enumerate(lam, start=1) for j in range(1, part + 1)]


def contents(lam: Partition) -> list[int]:
    return [j - i for i, j in cells(lam)]


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", check_partition(self.outer))
        object.__setattr__(self, "inner", check_partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    def cells(self) -> list[tuple[int, int]]:
        return skew_cells(self.outer, self.inner)

    def weight(self) -> int:
        return sum(self.outer) - sum(self.inner)


def skew_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    """Cells of outer not in inner, row-major; rejects non-contained pairs."""
    if not contains(outer, inner):
        raise ValueError(f"inner {inner} not contained in outer {outer}")
    padded = tuple(inner) + (0,) * (len(outer) - len(inner))
    return [
        (i, j)
        for i, part in enumerate(outer, start=1)
        for j in range(padded[i - 1] + 1, part + 1)
    ]


@dataclass(frozen=True)
class HookData:
    hooks: tuple  # hook length per cell, row-major
    product: Fraction  # H = prod of hook lengths
    q_product: Fraction | None  # H(q) = prod (1 - q^h), when q is given
    n_stat: int  # sum (i-1) * lam_i

    @property
    def cell_count(self) -> int:
        return len(self.hooks)


def hook_lengths(lam: Partition) -> tuple:
    conj = conjugate(lam)
    return tuple(lam[i - 1] + conj[j - 1] - i - j + 1 for i, j in cells(lam))


def n_statistic(lam: Partition) -> int:
    return sum((i - 1) * part for i, part in enumerate(lam, start=1))


def hook_data(lam: Partition, q: Fraction | None = None) -> HookData:
    """Hook lengths, their product, the q-hook product, and the n-statistic."""
    if q is not None and q == 0:
        raise ValueError("q must be nonzero")
    hooks = hook_lengths(lam)
    product = Fraction(1)
    for h in hooks:
        product *= h
    q_product = None
    if q is not None:
        q = Fraction(q)
        q_product = Fraction(1)
        for h in hooks:
            q_product *= 1 - q**h
    return HookData(hooks=hooks, product=product, q_product=q_product, n_stat=n_statistic(lam))


def frobenius(lam: Partition) -> tuple[tuple, tuple]:
    """Frobenius coordinates (arms | legs) with a_i = lam_i - i, b_i = lam'_i - i.

    Both lists run over the main-diagonal cells and are strictly decreasing.
    """
    conj = conjugate(lam)
    diag = sum(1 for i in range(len(lam)) if lam[i] >= i + 1)
    arms = tuple(lam[i] - (i + 1) for i in range(diag))
    legs = tuple(conj[i] - (i + 1) for i in range(diag))
    return arms, legs


def from_frobenius(arms: tuple, legs: tuple) -> Partition:
    """Rebuild a partition from its Frobenius coordinates."""
    if len(arms) != len(legs):
        raise ValueError("arms and legs must have equal length")
    d = len(arms)
    rows = [arms[i] + i + 1 for i in range(d)]
    col_lengths = [legs[i] + i + 1 for i in range(d)]
    max_row = col_lengths[0] if d else 0
    for i in range(d, max_row):
        rows.append(sum(1 for j in range(d) if col_lengths[j] >= i + 1))
    return check_partition([r for r in rows if r > 0])

"""Small GF(2) linear algebra on int bitmasks (bit j = coordinate j)."""

from __future__ import annotations


def rank(rows: list[int], ncols: int) -> int:
    work = list(rows)
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(work)):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and ((work[i] >> col) & 1):
                work[i] ^= work[r]
        r += 1
        if r == len(work):
            break
    return r


def row_reduce(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = list(rows)
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(work)):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and ((work[i] >> col) & 1):
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
    return work[:r], pivots


def kernel_basis(rows: list[int], ncols: int) -> list[int]:
    """Basis of {x : M x = 0} where row i of M is the bitmask rows[i]."""
    # Transpose-free approach: treat each row as a linear functional.
    reduced, pivots = row_reduce(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for r, p in zip(reduced, pivots):
            if (r >> free) & 1:
                vec |= 1 << p
        basis.append(vec)
    return basis


def in_span(vec: int, rows: list[int], ncols: int) -> bool:
    return rank(list(rows) + [vec], ncols) == rank(rows, ncols)


def dot(a: int, b: int) -> int:
    return bin(a & b).count("1") & 1

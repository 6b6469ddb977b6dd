"""Brute-force reference routes for the test suite.

Everything here is deliberately independent of the satfrac package: no
imports from it, no shared helpers, the dumbest correct algorithm that
will finish in test time.  Expected values frozen into the tests were
computed with these functions.
"""
from __future__ import annotations

import fractions
import itertools
import math


def compositions(total, parts):
    """All orderings of `total` into `parts` positive integers."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _adjacency(points):
    """Incidence graph of a point set: row i -> node ('A', i), col j -> ('B', j)."""
    adj = {}
    for i, j in points:
        adj.setdefault(("A", i), []).append(("B", j))
        adj.setdefault(("B", j), []).append(("A", i))
    return adj


def component_count(points):
    adj = _adjacency(points)
    seen = set()
    parts = 0
    for start in adj:
        if start in seen:
            continue
        parts += 1
        stack = [start]
        seen.add(start)
        while stack:
            for nbr in adj[stack.pop()]:
                if nbr not in seen:
                    seen.add(nbr)
                    stack.append(nbr)
    return parts


def is_tree_fraction(points, I, J):
    """Saturated test by the tree characterization: I+J-1 edges touching
    all I+J vertices and connected.  Uses neither determinants nor
    union-find, so it cross-checks both package routes."""
    if len(set(points)) != I + J - 1:
        return False
    adj = _adjacency(points)
    if len(adj) != I + J:
        return False
    return component_count(points) == 1


def brute_saturated(I, J):
    """All saturated fractions of the I x J grid by exhaustive subset filter."""
    grid = [(i, j) for i in range(1, I + 1) for j in range(1, J + 1)]
    out = []
    for sub in itertools.combinations(grid, I + J - 1):
        if is_tree_fraction(sub, I, J):
            out.append(sub)
    return out


def two_per_level_sets(k):
    """Point sets on the k x k grid where every row and column is used
    exactly twice: each row picks 2 columns, column counts checked by
    backtracking."""
    pairs = list(itertools.combinations(range(1, k + 1), 2))
    results = []
    counts = [0] * (k + 1)

    def place(row, chosen):
        if row > k:
            if all(c == 2 for c in counts[1:]):
                results.append(tuple(sorted(chosen)))
            return
        for a, b in pairs:
            if counts[a] < 2 and counts[b] < 2:
                counts[a] += 1
                counts[b] += 1
                place(row + 1, chosen + [(row, a), (row, b)])
                counts[a] -= 1
                counts[b] -= 1

    place(1, [])
    return results


def decomposed_cycle_count(k):
    """Number of k-cycles counted with a chosen two-part decomposition:
    a set with c cycle components splits in 2^(c-1) unordered ways."""
    return sum(2 ** (component_count(s) - 1) for s in two_per_level_sets(k))


def derangements_via_e(k):
    return math.floor(math.factorial(k) / math.e + 0.5)


def rank_of(matrix):
    """Rank by Gaussian elimination over exact rationals."""
    rows = [[fractions.Fraction(v) for v in row] for row in matrix]
    rank = 0
    for col in range(len(rows[0]) if rows else 0):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def det_via_fractions(matrix):
    """Determinant by exact-rational LU, as a cross-check on integer code."""
    n = len(matrix)
    rows = [[fractions.Fraction(v) for v in row] for row in matrix]
    det = fractions.Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, n):
            f = rows[r][col] / rows[col][col]
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    assert det.denominator == 1
    return int(det)


def brute_fiber(mA, mB):
    """All 0/1 tables with the given margins, row by row with no pruning."""
    I, J = len(mA), len(mB)
    tables = []
    row_choices = [list(itertools.combinations(range(J), mA[i])) for i in range(I)]
    for pick in itertools.product(*row_choices):
        table = tuple(
            tuple(1 if j in pick[i] else 0 for j in range(J)) for i in range(I)
        )
        if all(sum(table[i][j] for i in range(I)) == mB[j] for j in range(J)):
            tables.append(table)
    return tables


def table_of(points, I, J):
    return tuple(
        tuple(1 if (i, j) in set(points) else 0 for j in range(1, J + 1))
        for i in range(1, I + 1)
    )


def transforms(table, square):
    """Orbit neighbours of a 0/1 table under row/column permutations and,
    for square tables, transposition."""
    I, J = len(table), len(table[0])
    out = []
    for perm in itertools.permutations(range(I)):
        for cperm in itertools.permutations(range(J)):
            out.append(tuple(tuple(table[perm[i]][cperm[j]] for j in range(J)) for i in range(I)))
    if square:
        out.extend(tuple(zip(*t)) for t in list(out))
    return out


def orbit_partition(tables):
    """Group tables into equivalence classes: transforms() walks the whole
    symmetry group, so one representative's image set is its full orbit."""
    pool = set(tables)
    classes = []
    for t in tables:
        if t not in pool:
            continue
        orbit = set(transforms(t, len(t) == len(t[0]))) & pool
        pool -= orbit
        classes.append(sorted(orbit))
    return classes

"""Circuit Markov basis and fixed-margin walks on binary tables.

The moves come from circuits of K_{I,J}: closed alternating walks
through k distinct row levels and k distinct column levels, 2 <= k <=
min(I,J).  Writing the circuit as the edge sequence starting at its
smallest row level, edges in even position (0-indexed) get +1 and edges
in odd position get -1, which zeroes every row and column sum.  Adding
or subtracting a move keeps a table's margins, and the full set of
circuit moves connects every fiber, so the stay-or-move chain below has
the uniform distribution on the fiber as its stationary law.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .cycles import UnionFind, derangements
from .design import CapExceeded, Table, check_size

Move = Table  # I x J integer grid, entries in {-1, 0, +1}

DEFAULT_CAP = 10_000_000


@dataclass(frozen=True)
class Circuit:
    """Closed alternating walk, stored as its row and column sequences.

    rows = (i1..ik) and cols = (j1..jk) encode the edge sequence
    (i1,j1), (i2,j1), (i2,j2), (i3,j2), ..., (i1,jk): column jt links
    row it to row i(t+1), wrapping at the end.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        k = len(self.rows)
        if k < 2 or len(self.cols) != k:
            raise ValueError("circuit needs k >= 2 rows and as many columns")
        if len(set(self.rows)) != k or len(set(self.cols)) != k:
            raise ValueError("circuit rows and columns must be distinct")
        if min(self.rows) < 1 or min(self.cols) < 1:
            raise ValueError("circuit levels are 1-based")

    @property
    def k(self) -> int:
        return len(self.rows)

    def edge_sequence(self) -> tuple[tuple[int, int], ...]:
        """The 2k points in traversal order."""
        out = []
        k = self.k
        for t in range(k):
            out.append((self.rows[t], self.cols[t]))
            out.append((self.rows[(t + 1) % k], self.cols[t]))
        return tuple(out)


def circuit_to_move(circuit: Circuit, I: int, J: int) -> Move:
    """Signed incidence table of a circuit: +1 on even-position edges."""
    check_size(I, J)
    if max(circuit.rows) > I or max(circuit.cols) > J:
        raise ValueError(f"circuit does not fit a {I} x {J} grid")
    grid = [[0] * J for _ in range(I)]
    k = circuit.k
    for t in range(k):
        grid[circuit.rows[t] - 1][circuit.cols[t] - 1] = 1
        grid[circuit.rows[(t + 1) % k] - 1][circuit.cols[t] - 1] = -1
    return tuple(tuple(row) for row in grid)


def circuits(I: int, J: int, k: int) -> Iterator[Circuit]:
    """All degree-k circuits of K_{I,J}, each exactly once.

    Canonical form: the traversal starts at the smallest row level and
    runs toward the smaller of its two neighbouring column levels, so
    the two orientations of a circuit collapse to one.
    """
    check_size(I, J)
    if not 2 <= k <= min(I, J):
        raise ValueError(f"circuit degree must lie in 2..min(I,J) = {min(I, J)}")
    for rows in itertools.combinations(range(1, I + 1), k):
        first, rest = rows[0], rows[1:]
        for tail in itertools.permutations(rest):
            for cols in itertools.combinations(range(1, J + 1), k):
                for cperm in itertools.permutations(cols):
                    if cperm[0] > cperm[-1]:
                        continue
                    yield Circuit((first,) + tail, cperm)


def basis_size(I: int, J: int, max_degree: Optional[int] = None) -> int:
    """Closed-form circuit count: sum over k of C(I,k) C(J,k) (k-1)! k! / 2."""
    check_size(I, J)
    top = min(I, J) if max_degree is None else min(max_degree, I, J)
    return sum(
        math.comb(I, k) * math.comb(J, k) * math.factorial(k - 1) * math.factorial(k) // 2
        for k in range(2, top + 1)
    )


def markov_basis(
    I: int, J: int, max_degree: Optional[int] = None, cap: int = DEFAULT_CAP
) -> tuple[Move, ...]:
    """One move per circuit of each degree from 2 up to min(I,J).

    max_degree truncates the basis (degree 2 alone gives the classical
    swap moves).  Refuses to build more than cap moves.
    """
    total = basis_size(I, J, max_degree)
    if total > cap:
        raise CapExceeded(f"basis would hold {total} moves, over the cap of {cap}")
    top = min(I, J) if max_degree is None else min(max_degree, I, J)
    out = []
    for k in range(2, top + 1):
        out.extend(circuit_to_move(c, I, J) for c in circuits(I, J, k))
    return tuple(out)


def _as_table(table: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(row) for row in table)


def apply_move(table: Sequence[Sequence[int]], move: Move, sign: int = 1) -> Optional[Table]:
    """table + sign*move when every entry stays in {0,1}, else None."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    if len(table) != len(move) or any(len(r) != len(m) for r, m in zip(table, move)):
        raise ValueError("table and move shapes differ")
    out = []
    for trow, mrow in zip(table, move):
        row = []
        for t, m in zip(trow, mrow):
            v = t + sign * m
            if v not in (0, 1):
                return None
            row.append(v)
        out.append(tuple(row))
    return tuple(out)


def _check_weight(target: Callable[[Table], float], table: Table) -> float:
    w = target(table)
    if not w > 0:
        raise ValueError(f"target weight must be positive, got {w!r}")
    return w


def walk_states(
    start: Sequence[Sequence[int]],
    basis: Sequence[Move],
    steps: int,
    seed,
    target: Optional[Callable[[Table], float]] = None,
) -> Iterator[Table]:
    """Yield the chain state after each of `steps` transitions.

    Proposal: one uniformly chosen basis move with a uniform sign.  A
    proposal leaving {0,1} is rejected and the state repeats (the lazy
    convention: rejections consume a step).  With a target weight
    function the acceptance ratio is min(1, target(next)/target(cur));
    ratios >= 1 are accepted without drawing, so a constant target
    replays exactly the plain walk's trajectory for the same seed.
    """
    if not basis:
        raise ValueError("empty move basis")
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    cur = _as_table(start)
    if any(v not in (0, 1) for row in cur for v in row):
        raise ValueError("start is not a 0/1 table")
    w_cur = _check_weight(target, cur) if target is not None else 1.0
    for _ in range(steps):
        move = basis[rng.randrange(len(basis))]
        sign = 1 if rng.randrange(2) == 0 else -1
        nxt = apply_move(cur, move, sign)
        if nxt is not None:
            if target is None:
                cur = nxt
            else:
                w_nxt = _check_weight(target, nxt)
                if w_nxt >= w_cur or rng.random() * w_cur < w_nxt:
                    cur, w_cur = nxt, w_nxt
        yield cur


def random_walk(start, basis: Sequence[Move], steps: int, seed) -> Table:
    """Final state of the uniform stay-or-move chain."""
    cur = _as_table(start)
    for cur in walk_states(start, basis, steps, seed):
        pass
    return cur


def metropolis_walk(start, basis: Sequence[Move], target, steps: int, seed) -> Table:
    """Final state of the weighted chain; stationary law proportional to target."""
    cur = _as_table(start)
    for cur in walk_states(start, basis, steps, seed, target=target):
        pass
    return cur


def _check_fiber_margins(mA, mB):
    mA, mB = tuple(mA), tuple(mB)
    for name, vec in (("mA", mA), ("mB", mB)):
        if not vec:
            raise ValueError(f"{name} is empty")
        for x in vec:
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"{name} entry {x!r} invalid: fiber margins are integers >= 0")
    if sum(mA) != sum(mB):
        raise ValueError(f"margin sums differ: {sum(mA)} vs {sum(mB)}")
    return mA, mB


def fiber_enumerate(mA, mB, cap: int = DEFAULT_CAP) -> list[Table]:
    """Every 0/1 table with row sums mA and column sums mB.

    Backtracking row by row; the upfront C(J, mA[i]) placement product
    guards against hopeless inputs.
    """
    mA, mB = _check_fiber_margins(mA, mB)
    I, J = len(mA), len(mB)
    bound = math.prod(math.comb(J, a) for a in mA)
    if bound > cap:
        raise CapExceeded(f"{bound} candidate placements exceed the cap of {cap}")
    colrem = list(mB)
    rows: list[tuple[int, ...]] = []
    out: list[Table] = []

    def fill(i: int) -> None:
        if i == I:
            if all(c == 0 for c in colrem):
                out.append(tuple(rows))
            return
        for cols in itertools.combinations(range(J), mA[i]):
            if any(colrem[j] == 0 for j in cols):
                continue
            for j in cols:
                colrem[j] -= 1
            rows.append(tuple(1 if j in cols else 0 for j in range(J)))
            fill(i + 1)
            rows.pop()
            for j in cols:
                colrem[j] += 1

    fill(0)
    return out


@dataclass(frozen=True)
class FiberReport:
    """Connectivity of the move graph over one enumerated fiber."""

    fiber_size: int
    components: int
    connected: bool

    def __bool__(self) -> bool:
        return self.connected


def verify_connectivity(mA, mB, basis: Optional[Sequence[Move]] = None,
                        cap: int = DEFAULT_CAP) -> FiberReport:
    """Enumerate the fiber and check the move graph has one component.

    An empty or singleton fiber counts as connected.  basis defaults to
    the full circuit basis of the len(mA) x len(mB) grid.
    """
    tables = fiber_enumerate(mA, mB, cap)
    if basis is None:
        basis = markov_basis(len(mA), len(mB), cap=cap)
    index = {t: n for n, t in enumerate(tables)}
    uf = UnionFind()
    for n in range(len(tables)):
        uf.find(n)
    for t in tables:
        for move in basis:
            nxt = apply_move(t, move, 1)
            if nxt is not None:
                uf.union(index[t], index[nxt])
    components = len({uf.find(n) for n in range(len(tables))})
    return FiberReport(len(tables), components, components <= 1)

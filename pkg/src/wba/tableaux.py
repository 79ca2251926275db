"""Partitions, bipartitions and walled tableaux.

A walled tableau of shape (r, s) is a path in the branching graph of the tower
of walled Brauer algebras: the first r steps each add a box to the left
diagram, the remaining s steps each add a box to the right diagram or remove a
box from the left one.  Paths are stored as move sequences; bipartition
sequences, contents and exponents are derived.  Cells are 1-based (row,
column).

Sign conventions: contents use column - row (plus d for right additions,
negated for removals); the diagonal statistics g, theta and the Laplacian are
indexed by row - column.  Both conventions are kept explicit in the API names
to avoid sign bugs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional

from .diagrams import Shape
from .errors import IllegalMove, IndexOutOfRange, ParseError
from .scalars import DeltaScalar, affine, scalar_str


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise IndexOutOfRange(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise IndexOutOfRange(f"partition parts must be weakly decreasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def cells(self) -> tuple:
        return tuple(
            (i, j) for i, row in enumerate(self.parts, 1) for j in range(1, row + 1)
        )

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def addable_cells(self) -> tuple:
        out = []
        for i in range(1, len(self.parts) + 2):
            j = self.parts[i - 1] + 1 if i <= len(self.parts) else 1
            if i == 1 or self.parts[i - 2] >= j:
                out.append((i, j))
        return tuple(out)

    def removable_cells(self) -> tuple:
        out = []
        for i, row in enumerate(self.parts, 1):
            if i == len(self.parts) or self.parts[i] < row:
                out.append((i, row))
        return tuple(out)

    def with_cell(self, cell) -> "Partition":
        if cell not in self.addable_cells():
            raise IndexOutOfRange(f"cell {cell} is not addable to {self.parts}")
        i, _ = cell
        rows = list(self.parts)
        if i > len(rows):
            rows.append(1)
        else:
            rows[i - 1] += 1
        return Partition(tuple(rows))

    def without_cell(self, cell) -> "Partition":
        if cell not in self.removable_cells():
            raise IndexOutOfRange(f"cell {cell} is not removable from {self.parts}")
        i, _ = cell
        rows = list(self.parts)
        rows[i - 1] -= 1
        if rows[i - 1] == 0:
            rows.pop()
        return Partition(tuple(rows))

    def __repr__(self):
        return f"Partition({list(self.parts)})"


EMPTY = Partition(())


@dataclass(frozen=True)
class Bipartition:
    left: Partition = EMPTY
    right: Partition = EMPTY

    def __repr__(self):
        return f"Bipartition({list(self.left.parts)}|{list(self.right.parts)})"


class Move(NamedTuple):
    kind: str  # 'L+', 'L-' or 'R+'
    row: int
    col: int

    def content(self) -> DeltaScalar:
        i, j = self.row, self.col
        if self.kind == "L+":
            return affine(j - i)
        if self.kind == "L-":
            return affine(i - j)
        return affine(j - i, 1)

    def __str__(self):
        return f"{self.kind}{self.row},{self.col}"


_MOVE_RE = re.compile(r"^([LR])([+-])(\d+),(\d+)$")


def parse_move(text: str) -> Move:
    m = _MOVE_RE.match(text.strip())
    if m is None:
        raise ParseError(f"cannot parse move {text!r}")
    kind = m.group(1) + m.group(2)
    if kind == "R-":
        raise ParseError(f"boxes are never removed from the right diagram: {text!r}")
    return Move(kind, int(m.group(3)), int(m.group(4)))


@dataclass(frozen=True)
class WalledTableau:
    shape: Shape
    moves: tuple
    steps: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))
        r, n = self.shape.r, self.shape.n
        state = Bipartition()
        steps = [state]
        for t, move in enumerate(self.moves, 1):
            cell = (move.row, move.col)
            if t <= r:
                if move.kind != "L+":
                    raise IllegalMove(t, f"step {t} <= r must add to the left diagram")
                if cell not in state.left.addable_cells():
                    raise IllegalMove(t, f"cell {cell} not addable to {state.left.parts}")
                state = Bipartition(state.left.with_cell(cell), state.right)
            elif move.kind == "R+":
                if cell not in state.right.addable_cells():
                    raise IllegalMove(t, f"cell {cell} not addable to {state.right.parts}")
                state = Bipartition(state.left, state.right.with_cell(cell))
            elif move.kind == "L-":
                if cell not in state.left.removable_cells():
                    raise IllegalMove(
                        t, f"cell {cell} not removable from {state.left.parts}"
                    )
                state = Bipartition(state.left.without_cell(cell), state.right)
            else:
                raise IllegalMove(t, f"unknown move kind {move.kind!r}")
            steps.append(state)
        if len(self.moves) != n:
            raise IllegalMove(len(self.moves) + 1, f"path length must be {n}")
        object.__setattr__(self, "steps", tuple(steps))

    @property
    def final(self) -> Bipartition:
        return self.steps[-1]

    @property
    def left_shape(self) -> Partition:
        """The left diagram after the wall is reached (step r)."""
        return self.steps[self.shape.r].left

    def contents(self) -> tuple:
        return tuple(m.content() for m in self.moves)

    def moves_str(self) -> str:
        return ";".join(str(m) for m in self.moves)

    def __repr__(self):
        return f"WalledTableau({self.shape.r},{self.shape.s},{self.moves_str()!r})"


def parse_tableau(text: str, shape: Shape) -> WalledTableau:
    pieces = [p for p in text.split(";") if p.strip()]
    return WalledTableau(shape, tuple(parse_move(p) for p in pieces))


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple:
    if n == 0:
        return (EMPTY,)
    out = []
    def build(remaining, maxpart, acc):
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            build(remaining - p, p, acc + [p])
    build(n, n, [])
    return tuple(out)


def enumerate_bipartitions(shape: Shape) -> list:
    """All (f, bipartition) with |left| = r - f, |right| = s - f."""
    out = []
    for f in range(min(shape.r, shape.s) + 1):
        for left in _partitions_of(shape.r - f):
            for right in _partitions_of(shape.s - f):
                out.append((f, Bipartition(left, right)))
    return out


def _legal_moves(state: Bipartition, t: int, r: int) -> list:
    if t <= r:
        return [Move("L+", i, j) for (i, j) in state.left.addable_cells()]
    moves = [Move("R+", i, j) for (i, j) in state.right.addable_cells()]
    moves += [Move("L-", i, j) for (i, j) in state.left.removable_cells()]
    return moves


def enumerate_tableaux(shape: Shape, final: Optional[Bipartition] = None) -> list:
    """All walled tableaux of the shape, optionally filtered by final bipartition."""
    r, n = shape.r, shape.n
    out = []

    def extend(state, t, acc):
        if t > n:
            if final is None or state == final:
                out.append(WalledTableau(shape, tuple(acc)))
            return
        for move in _legal_moves(state, t, r):
            cell = (move.row, move.col)
            if move.kind == "L+":
                nxt = Bipartition(state.left.with_cell(cell), state.right)
            elif move.kind == "R+":
                nxt = Bipartition(state.left, state.right.with_cell(cell))
            else:
                nxt = Bipartition(state.left.without_cell(cell), state.right)
            acc.append(move)
            extend(nxt, t + 1, acc)
            acc.pop()

    extend(Bipartition(), 1, [])
    return out


def tableau_from_contents(shape: Shape, contents: Iterable[DeltaScalar]) -> WalledTableau:
    """Rebuild the unique path with the given content sequence."""
    r = shape.r
    state = Bipartition()
    moves = []
    for t, c in enumerate(contents, 1):
        matches = [m for m in _legal_moves(state, t, r) if m.content() == c]
        if len(matches) != 1:
            raise IllegalMove(t, f"{len(matches)} moves match content {scalar_str(c)}")
        move = matches[0]
        cell = (move.row, move.col)
        if move.kind == "L+":
            state = Bipartition(state.left.with_cell(cell), state.right)
        elif move.kind == "R+":
            state = Bipartition(state.left, state.right.with_cell(cell))
        else:
            state = Bipartition(state.left.without_cell(cell), state.right)
        moves.append(move)
    return WalledTableau(shape, tuple(moves))


@dataclass(frozen=True)
class TripleTableau:
    """The triple diagram of a path with its standard fillings.

    lambda_prime is the left diagram when the wall is reached, nu the final
    left diagram, lambda_second the final right diagram.  fill_prime numbers
    the cells of lambda_prime by addition order (1..r); removed_fill and
    right_fill number the cells of lambda_prime \\ nu and lambda_second by the
    order of the after-wall steps (r+1..n).
    """

    lambda_prime: Partition
    nu: Partition
    lambda_second: Partition
    fill_prime: tuple
    removed_fill: tuple
    right_fill: tuple


def triple_tableau(t: WalledTableau) -> TripleTableau:
    r = t.shape.r
    fill_prime = {}
    removed_fill = {}
    right_fill = {}
    for k, move in enumerate(t.moves, 1):
        cell = (move.row, move.col)
        if k <= r:
            fill_prime[cell] = k
        elif move.kind == "L-":
            removed_fill[cell] = k
        else:
            right_fill[cell] = k
    return TripleTableau(
        lambda_prime=t.left_shape,
        nu=t.final.left,
        lambda_second=t.final.right,
        fill_prime=tuple(sorted(fill_prime.items())),
        removed_fill=tuple(sorted(removed_fill.items())),
        right_fill=tuple(sorted(right_fill.items())),
    )


def tableau_from_triple(tt: TripleTableau, shape: Shape) -> WalledTableau:
    """Inverse of triple_tableau; validates standardness on reconstruction."""
    by_step = {}
    for cell, k in tt.fill_prime:
        by_step[k] = Move("L+", *cell)
    for cell, k in tt.removed_fill:
        by_step[k] = Move("L-", *cell)
    for cell, k in tt.right_fill:
        by_step[k] = Move("R+", *cell)
    if sorted(by_step) != list(range(1, shape.n + 1)):
        raise IllegalMove(len(by_step) + 1, "fillings do not cover steps 1..n")
    return WalledTableau(shape, tuple(by_step[k] for k in range(1, shape.n + 1)))


# Diagonal statistics; all indexed by row - column.

def _cellset(x) -> frozenset:
    if isinstance(x, Partition):
        return frozenset(x.cells())
    return frozenset((int(i), int(j)) for i, j in x)


def diag_len(x, k: int) -> int:
    """Number of cells (i, j) with i - j = k in a partition or cell set."""
    return sum(1 for i, j in _cellset(x) if i - j == k)


def _is_young(cells: frozenset) -> bool:
    for i, j in cells:
        if i > 1 and (i - 1, j) not in cells:
            return False
        if j > 1 and (i, j - 1) not in cells:
            return False
    return True


def _diag_cell(k: int, m: int) -> tuple:
    """The m-th cell on diagonal i - j = k, counting outward from the corner."""
    if k >= 0:
        return (k + m, m)
    return (m, m - k)


def theta(gamma: Partition, k: int) -> int:
    """-1 if diagonal k of gamma is extendable, +1 if retractable, else 0."""
    cells = _cellset(gamma)
    g = diag_len(cells, k)
    can_add = _is_young(cells | {_diag_cell(k, g + 1)})
    can_remove = g >= 1 and _is_young(cells - {_diag_cell(k, g)})
    if can_add and can_remove:
        raise AssertionError(f"theta cases overlap for {gamma} at diagonal {k}")
    if can_add:
        return -1
    if can_remove:
        return 1
    return 0


def laplacian(x, k: int) -> int:
    """The negative Laplacian 2g(k) - g(k+1) - g(k-1) of the diagonal lengths."""
    cells = _cellset(x)
    return 2 * diag_len(cells, k) - diag_len(cells, k + 1) - diag_len(cells, k - 1)


def exponents(t: WalledTableau) -> tuple:
    """Pole/zero exponent per step: theta of the removed diagonal, 0 otherwise."""
    lam = t.left_shape
    out = []
    for move in t.moves:
        if move.kind == "L-":
            out.append(theta(lam, move.row - move.col))
        else:
            out.append(0)
    return tuple(out)


def is_semisimple(r: int, s: int, delta) -> bool:
    delta = Fraction(delta)
    if r == 0 or s == 0:
        return True
    if delta.denominator != 1:
        return True
    dz = delta.numerator
    if abs(dz) > r + s - 2:
        return True
    return dz == 0 and (r, s) in {(1, 2), (1, 3), (2, 1), (3, 1)}


@dataclass
class BratteliGraph:
    shape: Shape
    levels: list  # levels[t] = list of Bipartition
    edges: list  # edges[t] = list of (from_idx, to_idx, Move)

    def path_count(self) -> int:
        counts = [1] * len(self.levels[0])
        for t in range(len(self.edges)):
            nxt = [0] * len(self.levels[t + 1])
            for i, j, _ in self.edges[t]:
                nxt[j] += counts[i]
            counts = nxt
        return sum(counts)

    def node_count(self) -> int:
        return sum(len(level) for level in self.levels)

    def to_json(self) -> dict:
        return {
            "r": self.shape.r,
            "s": self.shape.s,
            "levels": [
                [
                    {"left": list(b.left.parts), "right": list(b.right.parts)}
                    for b in level
                ]
                for level in self.levels
            ],
            "edges": [
                {
                    "level": t,
                    "from": i,
                    "to": j,
                    "content": scalar_str(move.content()),
                    "move": str(move),
                }
                for t, level_edges in enumerate(self.edges)
                for i, j, move in level_edges
            ],
        }

    def to_dot(self) -> str:
        def label(b: Bipartition) -> str:
            return f"{_pstr(b.left)}|{_pstr(b.right)}"

        lines = ["digraph bratteli {", "  rankdir=LR;"]
        for t, level in enumerate(self.levels):
            for i, b in enumerate(level):
                lines.append(f'  n{t}_{i} [label="{label(b)}"];')
        for t, level_edges in enumerate(self.edges):
            for i, j, move in level_edges:
                content = scalar_str(move.content())
                lines.append(f'  n{t}_{i} -> n{t + 1}_{j} [label="{content}"];')
        lines.append("}")
        return "\n".join(lines)


def _pstr(p: Partition) -> str:
    return "[" + ",".join(str(x) for x in p.parts) + "]"


def bratteli(shape: Shape) -> BratteliGraph:
    levels = [[Bipartition()]]
    edges = []
    for t in range(1, shape.n + 1):
        nxt: list = []
        index: dict = {}
        level_edges = []
        for i, state in enumerate(levels[-1]):
            for move in _legal_moves(state, t, shape.r):
                cell = (move.row, move.col)
                if move.kind == "L+":
                    child = Bipartition(state.left.with_cell(cell), state.right)
                elif move.kind == "R+":
                    child = Bipartition(state.left, state.right.with_cell(cell))
                else:
                    child = Bipartition(state.left.without_cell(cell), state.right)
                j = index.get(child)
                if j is None:
                    j = len(nxt)
                    index[child] = j
                    nxt.append(child)
                level_edges.append((i, j, move))
        levels.append(nxt)
        edges.append(level_edges)
    return BratteliGraph(shape, levels, edges)

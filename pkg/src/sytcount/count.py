"""Ground-truth counting and enumeration of standard fillings of a region.

A standard filling places 1..N so labels grow along rows, down columns, and
across every explicit precedence pair.  Because each region row is a
contiguous interval and partial fillings always occupy a prefix of each
row, a partial filling is summarized by its per-row fill counts.  The
counter sweeps label by label over a dictionary of reachable fill profiles,
which stays small (it is the set of order ideals of the cell poset) even
when the number of fillings is astronomically large.
"""

from __future__ import annotations

from typing import Iterator

from .shapes import CellRegion, Tableau

FillProfile = tuple[int, ...]


class LabelSetMismatch(ValueError):
    """Tableau labels are not exactly 1..N."""


def _preconditions(region: CellRegion):
    # needs[i][f]: requirements for filling the (f+1)-th cell of row i+1,
    # as (other_row_index, minimum_fill) pairs.  Left-neighbor order is
    # implicit in the prefix representation.
    rows = region.rows
    sources: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for src, dst in region.extra_precedences:
        sources.setdefault(dst, []).append(src)
    needs = []
    for i, (s, e) in enumerate(rows):
        per_fill = []
        for f in range(e - s + 1):
            c = s + f
            req = []
            if i > 0:
                s0, e0 = rows[i - 1]
                if s0 <= c <= e0:
                    req.append((i - 1, c - s0 + 1))
            for sr, sc in sorted(sources.get((i + 1, c), ())):
                req.append((sr - 1, sc - rows[sr - 1][0] + 1))
            per_fill.append(tuple(req))
        needs.append(tuple(per_fill))
    return tuple(needs)


def count_syt(region: CellRegion) -> int:
    """Number of standard fillings of ``region``. Exact."""
    nrows = region.num_rows
    if nrows == 0:
        return 1
    lens = tuple(e - s + 1 for s, e in region.rows)
    needs = _preconditions(region)
    states: dict[FillProfile, int] = {(0,) * nrows: 1}
    for _ in range(region.size):
        nxt: dict[FillProfile, int] = {}
        for state, ways in states.items():
            for i in range(nrows):
                f = state[i]
                if f == lens[i]:
                    continue
                if all(state[j] >= need for j, need in needs[i][f]):
                    succ = state[:i] + (f + 1,) + state[i + 1 :]
                    nxt[succ] = nxt.get(succ, 0) + ways
        states = nxt
    (total,) = states.values()
    return total


def count_syt_dfs(region: CellRegion) -> int:
    """Same count by plain depth-first search, with no profile sharing.

    Time grows with the number of fillings, so this is only usable for
    small regions; it exists as an independent cross-check of
    :func:`count_syt`.
    """
    nrows = region.num_rows
    if nrows == 0:
        return 1
    lens = tuple(e - s + 1 for s, e in region.rows)
    needs = _preconditions(region)
    fills = [0] * nrows
    total_cells = region.size

    def walk(depth: int) -> int:
        if depth == total_cells:
            return 1
        total = 0
        for i in range(nrows):
            f = fills[i]
            if f < lens[i] and all(fills[j] >= need for j, need in needs[i][f]):
                fills[i] += 1
                total += walk(depth + 1)
                fills[i] -= 1
        return total

    return walk(0)


def enumerate_syt(region: CellRegion, limit: int | None = None) -> Iterator[Tableau]:
    """Yield every standard filling of ``region``.

    Order: at each step the next label goes into the smallest eligible row
    index, backtracking exhaustively, so tableaux come out sorted by the
    sequence of row indices taken by labels 1..N.  ``limit`` stops early.
    """
    if limit is not None and limit <= 0:
        return
    nrows = region.num_rows
    if nrows == 0:
        yield Tableau(region, ())
        return
    lens = tuple(e - s + 1 for s, e in region.rows)
    needs = _preconditions(region)
    fills = [0] * nrows
    grid: list[list[int]] = [[] for _ in range(nrows)]
    total_cells = region.size

    def walk(depth: int) -> Iterator[Tableau]:
        if depth == total_cells:
            yield Tableau(region, tuple(tuple(row) for row in grid))
            return
        for i in range(nrows):
            f = fills[i]
            if f < lens[i] and all(fills[j] >= need for j, need in needs[i][f]):
                fills[i] += 1
                grid[i].append(depth + 1)
                yield from walk(depth + 1)
                fills[i] -= 1
                grid[i].pop()

    emitted = 0
    for t in walk(0):
        yield t
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def is_valid_tableau(t: Tableau) -> bool:
    """Check a filling against every order constraint of its region.

    Raises :class:`LabelSetMismatch` when the labels are not exactly 1..N;
    returns False when the labels are right but some order is violated.
    """
    n = t.size
    seen = sorted(lbl for _, lbl in t.labels())
    if seen != list(range(1, n + 1)):
        raise LabelSetMismatch(f"labels are not 1..{n}")
    for row in t.rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    columns: dict[int, list[tuple[int, int]]] = {}
    for (r, c), lbl in t.labels():
        columns.setdefault(c, []).append((r, lbl))
    for entries in columns.values():
        entries.sort()
        if any(l1 >= l2 for (_, l1), (_, l2) in zip(entries, entries[1:])):
            return False
    for src, dst in t.region.extra_precedences:
        if t.label_at(*src) >= t.label_at(*dst):
            return False
    return True

"""Splitting bijections on standard tableaux.

A split cuts a tableau into the cells holding labels up to a threshold and
the rest.  The low piece keeps its labels and positions.  The high piece is
renumbered ``label -> N - label + 1`` and reflected across the
anti-diagonal of the bounding box, which turns its reversed order back
into row/column growth; the result is translated to standard position and
classified as an ordinary, shifted, or general region.

``split_threshold`` cuts a full rectangle or full shifted staircase at a
fixed label and is invertible (``unsplit_threshold``).  ``split_pivot``
cuts at the label of a distinguished boundary cell of a truncated shape;
summing over the pivot label's possible values is what turns the
complementary-pair summation identities into counts of truncated shapes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .count import count_syt, enumerate_syt, is_valid_tableau
from .formulas import PartTooSmall, frobenius_young, schur_count
from .shapes import (
    Cell,
    CellRegion,
    Partition,
    PartitionLike,
    Precedence,
    ShapeError,
    StrictPartition,
    Tableau,
    coerce_partition,
    coerce_strict,
    complement_in_rectangle,
    complement_in_staircase,
    ordinary_region,
    partitions_in_box,
    shifted_region,
    strict_partitions_in_staircase,
    union,
)
from .truncated import (
    rect_minus_square_plus1_region,
    rect_minus_square_region,
    stair_minus_square_plus1_region,
    stair_minus_square_region,
    stair_plus1_mu,
    stair_sq_mu,
)


class UnsupportedRegion(ValueError):
    """The operation is not defined on this kind of region."""


class IncompatibleShapes(ValueError):
    """The two pieces do not reassemble into the requested region."""


class NotOnBoundary(ValueError):
    """The pivot cell is not on the northeast boundary of the region."""


@dataclass(frozen=True)
class SplitResult:
    """Outcome of a split: the threshold and the two standalone tableaux."""

    t: int
    first: Tableau
    second: Tableau


def _is_full_rectangle(region: CellRegion) -> bool:
    rows = region.rows
    return all(s == 1 for s, _ in rows) and len({e for _, e in rows}) <= 1


def _is_full_staircase(region: CellRegion) -> bool:
    m = region.num_rows
    return all(
        (s, e) == (i, m) for i, (s, e) in enumerate(region.rows, start=1)
    )


def _flavor_of(region: CellRegion) -> str:
    if region.kind in ("shifted", "truncated_staircase"):
        return "shifted"
    if region.kind in ("ordinary", "truncated_rectangle"):
        return "ordinary"
    return "auto"


def _assemble(
    cells: dict[Cell, int], pairs: list[Precedence], flavor: str
) -> Tableau:
    """Build a standalone tableau from a coherent set of labeled cells.

    Translates to standard position, classifies the outline, and checks
    validity; a failed check means the cells did not come from a split of
    a standard tableau.
    """
    if not cells:
        empty = shifted_region(()) if flavor == "shifted" else ordinary_region(())
        return Tableau(empty, ())
    by_row: dict[int, list[int]] = {}
    for r, c in cells:
        by_row.setdefault(r, []).append(c)
    row_ids = sorted(by_row)
    if row_ids[-1] - row_ids[0] + 1 != len(row_ids):
        raise ShapeError("piece has a gap between rows")
    dr = 1 - row_ids[0]
    intervals = []
    for r in row_ids:
        cols = sorted(by_row[r])
        if cols[-1] - cols[0] + 1 != len(cols):
            raise ShapeError(f"piece row {r} is not contiguous")
        intervals.append((cols[0], cols[-1]))
    dc = 1 - min(s for s, _ in intervals)
    intervals = [(s + dc, e + dc) for s, e in intervals]
    starts = [s for s, _ in intervals]
    lengths = [e - s + 1 for s, e in intervals]
    ordinary_ok = all(s == 1 for s in starts) and all(
        a >= b for a, b in zip(lengths, lengths[1:])
    )
    shifted_ok = all(s == i for i, s in enumerate(starts, start=1)) and all(
        a > b for a, b in zip(lengths, lengths[1:])
    )
    if flavor == "ordinary" and ordinary_ok:
        region = ordinary_region(Partition(tuple(lengths)))
    elif flavor == "shifted" and shifted_ok:
        region = shifted_region(StrictPartition(tuple(lengths)))
    elif flavor == "auto" and ordinary_ok:
        region = ordinary_region(Partition(tuple(lengths)))
    elif flavor == "auto" and shifted_ok:
        region = shifted_region(StrictPartition(tuple(lengths)))
    else:
        moved_pairs = frozenset(
            ((a[0] + dr, a[1] + dc), (b[0] + dr, b[1] + dc)) for a, b in pairs
        )
        region = CellRegion(tuple(intervals), moved_pairs, "general")
    mapping = {(r + dr, c + dc): lbl for (r, c), lbl in cells.items()}
    piece = Tableau.from_labels(region, mapping)
    if not is_valid_tableau(piece):
        raise ShapeError("split produced an invalid filling")
    return piece


def _low_piece(t: Tableau, bound: int, flavor: str) -> Tableau:
    cells = {cell: lbl for cell, lbl in t.labels() if lbl <= bound}
    pairs = [
        (a, b)
        for a, b in t.region.extra_precedences
        if a in cells and b in cells
    ]
    return _assemble(cells, pairs, flavor)


def _high_piece(t: Tableau, bound: int, flavor: str) -> Tableau:
    total = t.size
    nrows, ncols = t.region.num_rows, t.region.max_col

    def reflect(cell: Cell) -> Cell:
        r, c = cell
        return (ncols + 1 - c, nrows + 1 - r)

    cells = {
        reflect(cell): total + 1 - lbl
        for cell, lbl in t.labels()
        if lbl > bound
    }
    kept = [
        (a, b)
        for a, b in t.region.extra_precedences
        if t.label_at(*a) > bound and t.label_at(*b) > bound
    ]
    pairs = [(reflect(b), reflect(a)) for a, b in kept]
    return _assemble(cells, pairs, flavor)


def split_threshold(t: Tableau, thresh: int) -> SplitResult:
    """Cut a full-rectangle or full-staircase tableau at a label threshold.

    The low piece is the subtableau of labels ``1..thresh``; the high piece
    is the renumbered reflection of the rest.  Both pieces are plain
    (ordinary or shifted) standard tableaux.
    """
    region = t.region
    if not (_is_full_rectangle(region) or _is_full_staircase(region)):
        raise UnsupportedRegion(
            "threshold splitting needs a full rectangle or full staircase"
        )
    if not 0 <= thresh <= region.size:
        raise ValueError(f"threshold must lie in 0..{region.size}, got {thresh}")
    flavor = _flavor_of(region)
    if flavor == "auto":
        flavor = "shifted" if _is_full_staircase(region) else "ordinary"
    return SplitResult(
        thresh,
        _low_piece(t, thresh, flavor),
        _high_piece(t, thresh, flavor),
    )


def unsplit_threshold(split: SplitResult, region: CellRegion) -> Tableau:
    """Reassemble a threshold split into a tableau of ``region``.

    Inverse of :func:`split_threshold`: the low piece embeds at its own
    coordinates and the high piece is reflected back.  Raises
    :class:`IncompatibleShapes` when the pieces do not tile the region.
    """
    if not (_is_full_rectangle(region) or _is_full_staircase(region)):
        raise UnsupportedRegion(
            "threshold splitting needs a full rectangle or full staircase"
        )
    total = region.size
    if split.first.size != split.t or split.second.size != total - split.t:
        raise IncompatibleShapes("piece sizes do not match the threshold")
    nrows, ncols = region.num_rows, region.max_col
    mapping: dict[Cell, int] = {}
    for cell, lbl in split.first.labels():
        mapping[cell] = lbl
    for (r, c), lbl in split.second.labels():
        mapping[(nrows + 1 - c, ncols + 1 - r)] = total + 1 - lbl
    if len(mapping) != total or set(mapping) != set(region.cells()):
        raise IncompatibleShapes("pieces do not tile the region")
    out = Tableau.from_labels(region, mapping)
    if not is_valid_tableau(out):
        raise IncompatibleShapes("pieces tile the region but break the order")
    return out


def is_boundary_cell(region: CellRegion, cell: Cell) -> bool:
    """True when no region cell lies strictly north and strictly east."""
    r, c = cell
    return cell in region and all(e <= c for _, e in region.rows[: r - 1])


def split_pivot(t: Tableau, pivot: Cell) -> SplitResult:
    """Split at the label of a boundary cell, dropping the cell itself.

    The pivot's label ``t`` becomes the threshold: the low piece holds
    labels ``1..t-1`` and the high piece the reflection of ``t+1..N``.  On
    the truncated families the two pieces are plain tableaux of
    complementary-pair shapes; for other pivots they may come out as
    general regions.
    """
    region = t.region
    if pivot not in region:
        raise NotOnBoundary(f"{pivot} is not a cell of the region")
    if not is_boundary_cell(region, pivot):
        raise NotOnBoundary(f"{pivot} has region cells strictly northeast")
    label = t.label_at(*pivot)
    flavor = _flavor_of(region)
    return SplitResult(
        label,
        _low_piece(t, label - 1, flavor),
        _high_piece(t, label, flavor),
    )


def piece_shape(t: Tableau) -> Partition | StrictPartition:
    """Row-length partition of a plain (ordinary or shifted) piece."""
    lengths = tuple(e - s + 1 for s, e in t.region.rows)
    if t.region.kind == "shifted":
        return StrictPartition(lengths)
    if t.region.kind == "ordinary":
        return Partition(lengths)
    raise ShapeError("piece is not a plain diagram")


def pivot_shape_histogram(
    region: CellRegion, pivot: Cell
) -> dict[tuple[Partition | StrictPartition, Partition | StrictPartition], int]:
    """Count split piece shape pairs over every tableau of ``region``."""
    hist: dict = {}
    for t in enumerate_syt(region):
        parts = split_pivot(t, pivot)
        key = (piece_shape(parts.first), piece_shape(parts.second))
        hist[key] = hist.get(key, 0) + 1
    return hist


@dataclass(frozen=True)
class PivotReport:
    """Comparison of a brute-force count with a complementary-pair sum."""

    description: str
    region: CellRegion
    pivot: Cell
    tableau_count: int
    identity_sum: int
    terms: tuple[tuple[tuple, int], ...]

    @property
    def passed(self) -> bool:
        return self.tableau_count == self.identity_sum


def _staircase_family(mu: StrictPartition, m: int) -> tuple[CellRegion, Cell]:
    k = len(mu.parts)
    if k == 0:
        # Without a prefix the shape is the untruncated staircase, which
        # has no pivot cell; the fixed-size sum identity covers it instead.
        raise UnsupportedRegion("empty prefix: the full staircase has no pivot")
    if mu == stair_plus1_mu(m, k):
        return stair_minus_square_plus1_region(m, k), (k, m + k + 1)
    if k >= 2 and mu == stair_sq_mu(m, k):
        return stair_minus_square_region(m, k), (k, m + 2 * k - 1)
    raise UnsupportedRegion(
        f"no truncated staircase corresponds to the prefix {mu} over order {m}"
    )


def _rect_family(
    mu: Partition, k: int, m: int, n: int
) -> tuple[CellRegion, Cell]:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if mu == Partition():
        region = rect_minus_square_plus1_region(m, n, k)
        dropped = (m + k) - region.num_rows
        return region, (k - dropped, n + 1)
    if k >= 2 and mu == Partition((1,) * (k - 1)):
        return rect_minus_square_region(m, n, k), (k, n + 1)
    raise UnsupportedRegion(
        f"no truncated rectangle corresponds to mu={mu}, k={k}"
    )


def verify_pivot_identity_staircase(mu: PartitionLike, m: int) -> PivotReport:
    """Count the staircase-family truncated shape by brute force and
    compare with the sum of shifted pair products it must equal.
    """
    mu = coerce_strict(mu)
    if mu.parts and mu.parts[-1] <= m:
        raise PartTooSmall(f"every part of {mu} must exceed {m}")
    region, pivot = _staircase_family(mu, m)
    terms = []
    total = 0
    for lam in strict_partitions_in_staircase(m):
        lam_c = complement_in_staircase(lam, m)
        a, b = union(mu, lam), union(mu, lam_c)
        prod = schur_count(a) * schur_count(b)
        terms.append(((a, b), prod))
        total += prod
    return PivotReport(
        f"staircase family mu={mu} m={m}",
        region,
        pivot,
        count_syt(region),
        total,
        tuple(terms),
    )


def verify_pivot_identity_rect(
    mu: PartitionLike, k: int, m: int, n: int
) -> PivotReport:
    """Count the rectangle-family truncated shape by brute force and
    compare with the sum of ordinary pair products it must equal.
    """
    mu = coerce_partition(mu)
    if len(mu.parts) > k:
        raise ValueError(f"{mu} has more than {k} parts")
    region, pivot = _rect_family(mu, k, m, n)
    alpha = mu + Partition((n,) * k)
    beta = mu + Partition((m,) * k)
    terms = []
    total = 0
    for lam in partitions_in_box(m, n):
        lam_c = complement_in_rectangle(lam, m, n)
        a, b = union(alpha, lam), union(beta, lam_c)
        prod = frobenius_young(a) * frobenius_young(b)
        terms.append(((a, b), prod))
        total += prod
    return PivotReport(
        f"rectangle family mu={mu} k={k} m={m} n={n}",
        region,
        pivot,
        count_syt(region),
        total,
        tuple(terms),
    )

"""Flagged set-valued tableaux, reverse plane partitions, and their enumerators.

Entries of a set-valued tableau are nonempty sets of positive integers; two
sets compare by A <= B iff max A <= min B and A < B iff max A < min B.  Rows
must be weakly increasing and columns strictly increasing under these
comparisons, and every entry in row i is capped by the flag k + i.  A
reverse plane partition carries one entry per cell, in [0, k], with rows
and columns weakly increasing.

The enumerators walk cells in row-major order choosing values in ascending
order, so each family comes out in a fixed order: lexicographic in the flat
entry stream (the barely set-valued family is grouped by the position of
the doubled cell first).  They are the counting oracles that the identity
checks elsewhere in the package are measured against, so they stay
deliberately direct: plain backtracking with feasibility pruning against
the left and upper neighbors only.
"""

from bisect import bisect_left

from .shapes import Partition

__all__ = [
    "ReversePlanePartition",
    "SetValuedTableau",
    "classify",
    "count_bssyt",
    "count_rpp",
    "count_ssyt",
    "enumerate_bssyt",
    "enumerate_rpp",
    "enumerate_ssyt",
    "induced_subshape",
    "rpp_to_ssyt",
    "ssyt_to_rpp",
]


def _require_bound(k):
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"bound k must be a positive integer, got {k!r}")


def _split_top_level(text):
    """Split a row on commas that are not inside braces."""
    cells, depth, start = [], 0, 0
    for pos, ch in enumerate(text):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced braces in {text!r}")
        elif ch == "," and depth == 0:
            cells.append(text[start:pos])
            start = pos + 1
    if depth:
        raise ValueError(f"unbalanced braces in {text!r}")
    cells.append(text[start:])
    return cells


class SetValuedTableau:
    """Shape, one sorted integer set per cell, and the flag bound k.

    Cells are stored as sorted tuples of distinct ints; rows is a tuple of
    row tuples matching the shape.  Construction validates everything; the
    enumerators and bijections use a private unchecked builder because their
    outputs are valid by construction.
    """

    __slots__ = ("shape", "rows", "k")

    def __init__(self, shape, rows, k):
        normalized = []
        for row in rows:
            cells = []
            for cell in row:
                values = tuple(sorted(cell))
                if len(set(values)) != len(values):
                    raise ValueError(f"repeated entry in cell {cell!r}")
                cells.append(values)
            normalized.append(tuple(cells))
        self.shape = shape
        self.rows = tuple(normalized)
        self.k = k
        self.validate()

    def validate(self):
        """Re-check every invariant; raises ValueError on the first failure."""
        _require_bound(self.k)
        if len(self.rows) != self.shape.rows:
            raise ValueError("row count does not match the shape")
        for t, (row, width) in enumerate(zip(self.rows, self.shape.parts), start=1):
            if len(row) != width:
                raise ValueError(f"row {t} does not match the shape")
            for j, cell in enumerate(row, start=1):
                if not cell:
                    raise ValueError(f"empty cell at ({t}, {j})")
                if any(not isinstance(v, int) for v in cell):
                    raise ValueError(f"non-integer entry at ({t}, {j})")
                if any(cell[m] >= cell[m + 1] for m in range(len(cell) - 1)):
                    raise ValueError(f"cell at ({t}, {j}) is not a sorted set")
                if cell[0] < 1:
                    raise ValueError(f"entry below 1 at ({t}, {j})")
                if cell[-1] > self.k + t:
                    raise ValueError(
                        f"entry {cell[-1]} at ({t}, {j}) exceeds the row flag {self.k + t}"
                    )
                if j > 1 and row[j - 2][-1] > cell[0]:
                    raise ValueError(f"row {t} is not weakly increasing at column {j}")
                if t > 1 and self.rows[t - 2][j - 1][-1] >= cell[0]:
                    raise ValueError(f"column {j} is not strictly increasing at row {t}")

    def entry(self, row, col):
        """The sorted entry set at the 1-based (row, col)."""
        return self.rows[row - 1][col - 1]

    def serialize(self):
        """Rows joined by "/", cells by ","; multi-entry cells braced, e.g. "{2,4}"."""
        return "/".join(
            ",".join(
                str(cell[0]) if len(cell) == 1 else "{" + ",".join(map(str, cell)) + "}"
                for cell in row
            )
            for row in self.rows
        )

    @classmethod
    def parse(cls, text, k):
        """Inverse of serialize; the bound k is not part of the text form."""
        text = text.strip()
        if not text:
            return cls(Partition(), (), k)
        rows = []
        for row_text in text.split("/"):
            cells = []
            for token in _split_top_level(row_text):
                token = token.strip()
                if token.startswith("{") and token.endswith("}"):
                    cells.append(tuple(int(v) for v in token[1:-1].split(",")))
                else:
                    cells.append((int(token),))
            rows.append(tuple(cells))
        shape = Partition(len(row) for row in rows)
        return cls(shape, tuple(rows), k)

    def __eq__(self, other):
        if not isinstance(other, SetValuedTableau):
            return NotImplemented
        return (self.shape, self.rows, self.k) == (other.shape, other.rows, other.k)

    def __hash__(self):
        return hash((self.shape, self.rows, self.k))

    def __repr__(self):
        return f"SetValuedTableau({self.serialize()!r}, k={self.k})"


class ReversePlanePartition:
    """Shape, one entry in [0, k] per cell, rows and columns weakly increasing."""

    __slots__ = ("shape", "rows", "k")

    def __init__(self, shape, rows, k):
        self.shape = shape
        self.rows = tuple(tuple(row) for row in rows)
        self.k = k
        self.validate()

    def validate(self):
        _require_bound(self.k)
        if len(self.rows) != self.shape.rows:
            raise ValueError("row count does not match the shape")
        for t, (row, width) in enumerate(zip(self.rows, self.shape.parts), start=1):
            if len(row) != width:
                raise ValueError(f"row {t} does not match the shape")
            for j, v in enumerate(row, start=1):
                if not isinstance(v, int) or not 0 <= v <= self.k:
                    raise ValueError(f"entry {v!r} at ({t}, {j}) outside [0, {self.k}]")
                if j > 1 and row[j - 2] > v:
                    raise ValueError(f"row {t} is not weakly increasing at column {j}")
                if t > 1 and self.rows[t - 2][j - 1] > v:
                    raise ValueError(f"column {j} is not weakly increasing at row {t}")

    def entry(self, row, col):
        return self.rows[row - 1][col - 1]

    def serialize(self):
        return "/".join(",".join(str(v) for v in row) for row in self.rows)

    @classmethod
    def parse(cls, text, k):
        text = text.strip()
        if not text:
            return cls(Partition(), (), k)
        rows = tuple(
            tuple(int(v) for v in row_text.split(",")) for row_text in text.split("/")
        )
        shape = Partition(len(row) for row in rows)
        return cls(shape, rows, k)

    def __eq__(self, other):
        if not isinstance(other, ReversePlanePartition):
            return NotImplemented
        return (self.shape, self.rows, self.k) == (other.shape, other.rows, other.k)

    def __hash__(self):
        return hash((self.shape, self.rows, self.k))

    def __repr__(self):
        return f"ReversePlanePartition({self.serialize()!r}, k={self.k})"


def _svt_unchecked(shape, rows, k):
    t = object.__new__(SetValuedTableau)
    t.shape = shape
    t.rows = rows
    t.k = k
    return t


def _rpp_unchecked(shape, rows, k):
    p = object.__new__(ReversePlanePartition)
    p.shape = shape
    p.rows = rows
    p.k = k
    return p


def classify(T):
    """"SSYT" if every cell is a singleton, "BSSYT" if exactly one cell holds
    exactly two entries and the rest are singletons, "other" otherwise."""
    doubled = 0
    for row in T.rows:
        for cell in row:
            size = len(cell)
            if size == 2:
                doubled += 1
                if doubled > 1:
                    return "other"
            elif size != 1:
                return "other"
    return "BSSYT" if doubled else "SSYT"


def _setvalued_grids(shape, k, wide):
    """Backtrack over cells in row-major order, ascending values.

    Every cell receives a singleton except the optional 0-based `wide` cell,
    which receives a two-element set.  Yields rows as nested tuples with
    each cell a sorted tuple.
    """
    parts = shape.parts
    if not parts:
        if wide is None:
            yield ()
        return
    grid = [[None] * p for p in parts]
    cells = [(t, j) for t, p in enumerate(parts) for j in range(p)]
    total = len(cells)

    def rec(idx):
        if idx == total:
            yield tuple(tuple(row) for row in grid)
            return
        t, j = cells[idx]
        lo = 1
        if j and grid[t][j - 1][-1] > lo:
            lo = grid[t][j - 1][-1]
        if t and grid[t - 1][j][-1] >= lo:
            lo = grid[t - 1][j][-1] + 1
        hi = k + t + 1
        row = grid[t]
        if (t, j) == wide:
            for a in range(lo, hi):
                for b in range(a + 1, hi + 1):
                    row[j] = (a, b)
                    yield from rec(idx + 1)
        else:
            for v in range(lo, hi + 1):
                row[j] = (v,)
                yield from rec(idx + 1)
        row[j] = None

    yield from rec(0)


def _rpp_grids(shape, k):
    """Backtrack over cells in row-major order; plain int entries in [0, k]."""
    parts = shape.parts
    if not parts:
        yield ()
        return
    grid = [[0] * p for p in parts]
    cells = [(t, j) for t, p in enumerate(parts) for j in range(p)]
    total = len(cells)

    def rec(idx):
        if idx == total:
            yield tuple(tuple(row) for row in grid)
            return
        t, j = cells[idx]
        lo = 0
        if j and grid[t][j - 1] > lo:
            lo = grid[t][j - 1]
        if t and grid[t - 1][j] > lo:
            lo = grid[t - 1][j]
        row = grid[t]
        for v in range(lo, k + 1):
            row[j] = v
            yield from rec(idx + 1)
        row[j] = 0

    yield from rec(0)


def enumerate_ssyt(shape, k):
    """All flagged semistandard tableaux of the shape, lexicographic order."""
    _require_bound(k)
    for rows in _setvalued_grids(shape, k, None):
        yield _svt_unchecked(shape, rows, k)


def count_ssyt(shape, k):
    _require_bound(k)
    return sum(1 for _ in _setvalued_grids(shape, k, None))


def enumerate_bssyt(shape, k):
    """All barely set-valued tableaux: one cell doubled, everything else single.

    Grouped by the doubled cell position in row-major order; within a group
    the order is lexicographic in the entry stream.
    """
    _require_bound(k)
    for t in range(shape.rows):
        for j in range(shape.parts[t]):
            for rows in _setvalued_grids(shape, k, (t, j)):
                yield _svt_unchecked(shape, rows, k)


def count_bssyt(shape, k):
    _require_bound(k)
    return sum(
        1
        for t in range(shape.rows)
        for j in range(shape.parts[t])
        for _ in _setvalued_grids(shape, k, (t, j))
    )


def enumerate_rpp(shape, k):
    """All reverse plane partitions of the shape with entries at most k."""
    _require_bound(k)
    for rows in _rpp_grids(shape, k):
        yield _rpp_unchecked(shape, rows, k)


def count_rpp(shape, k):
    _require_bound(k)
    return sum(1 for _ in _rpp_grids(shape, k))


def rpp_to_ssyt(P):
    """Add the row index t to every entry of row t; lands in the flagged family."""
    rows = tuple(
        tuple((v + t,) for v in row) for t, row in enumerate(P.rows, start=1)
    )
    return _svt_unchecked(P.shape, rows, P.k)


def ssyt_to_rpp(T):
    """Subtract the row index t from every entry of row t; inverse of rpp_to_ssyt."""
    if classify(T) != "SSYT":
        raise ValueError("row-shift inverse needs an all-singleton tableau")
    rows = []
    for t, row in enumerate(T.rows, start=1):
        shifted = tuple(cell[0] - t for cell in row)
        if any(v < 0 for v in shifted):
            raise ValueError(f"entry below its row index in row {t}")
        rows.append(shifted)
    return ReversePlanePartition(T.shape, tuple(rows), T.k)


def induced_subshape(P, i):
    """The cells of P holding entries strictly below the level i (1 <= i <= k).

    Always a partition: rows weakly increase, so those cells are row
    prefixes, and columns weakly increase, so the prefix lengths weakly
    decrease.
    """
    if not 1 <= i <= P.k:
        raise ValueError(f"level {i} outside [1, {P.k}]")
    counts = []
    for row in P.rows:
        c = bisect_left(row, i)
        if c == 0:
            break
        counts.append(c)
    return Partition(counts)

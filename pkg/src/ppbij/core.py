"""Core value types: partitions, plane partitions, N-matrices, words.

All indices are 1-based (row i, column j, value level l); conversion to
0-based happens only inside implementations and at the JSON boundary.
All types are immutable and hashable, so they can be used freely as set
elements and dictionary keys during exhaustive enumeration.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple


class Cell(NamedTuple):
    """A 1-based (row, column) position."""

    i: int
    j: int


class Partition:
    """A weakly decreasing sequence of positive integers.

    The empty partition is allowed and is the identity for containment
    questions.  Trailing zeros are never stored.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts if p != 0)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError("parts must be weakly decreasing")
        if parts and parts[-1] < 0:
            raise ValueError("parts must be positive")
        self.parts = parts

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(("Partition", self.parts))

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def __bool__(self) -> bool:
        return bool(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based); 0 beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """Young-diagram containment: other fits inside self."""
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    @staticmethod
    def rectangle(k: int, n: int) -> "Partition":
        """The rectangle (k^n): n rows of length k."""
        return Partition((k,) * n) if k > 0 else Partition()

    def to_json(self) -> list:
        return list(self.parts)

    @staticmethod
    def from_json(data) -> "Partition":
        return Partition(data)


class PlanePartition:
    """A 2D array of positive integers, weakly decreasing along rows and
    columns; absent cells read as 0.

    Stored canonically: zero entries are trimmed, so two plane partitions
    are equal iff their stored rows are equal.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        raw = [tuple(int(v) for v in row) for row in rows]
        trimmed = []
        for row in raw:
            if any(v < 0 for v in row):
                raise ValueError("entries must be nonnegative")
            n = len(row)
            while n > 0 and row[n - 1] == 0:
                n -= 1
            if 0 in row[:n]:
                raise ValueError("zero entry inside a row")
            trimmed.append(row[:n])
        while trimmed and not trimmed[-1]:
            trimmed.pop()
        if any(not r for r in trimmed):
            raise ValueError("empty row above a nonempty row")
        rows = tuple(trimmed)
        for a, b in zip(rows, rows[1:]):
            if len(b) > len(a):
                raise ValueError("row lengths must weakly decrease")
        for r in rows:
            for a, b in zip(r, r[1:]):
                if a < b:
                    raise ValueError("rows must be weakly decreasing")
        for i in range(1, len(rows)):
            upper, lower = rows[i - 1], rows[i]
            for j, v in enumerate(lower):
                if v > upper[j]:
                    raise ValueError("columns must be weakly decreasing")
        self.rows = rows

    def __eq__(self, other) -> bool:
        return isinstance(other, PlanePartition) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("PlanePartition", self.rows))

    def __repr__(self) -> str:
        return f"PlanePartition({[list(r) for r in self.rows]})"

    def __bool__(self) -> bool:
        return bool(self.rows)

    def entry(self, i: int, j: int) -> int:
        """Entry at (i, j), 1-based; 0 for absent cells."""
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return 0

    def n_rows(self) -> int:
        return len(self.rows)

    def max_entry(self) -> int:
        return self.rows[0][0] if self.rows else 0

    def cells(self) -> Iterator[Cell]:
        for i, row in enumerate(self.rows, start=1):
            for j in range(1, len(row) + 1):
                yield Cell(i, j)

    # -- statistics ----------------------------------------------------

    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def volume(self) -> int:
        return sum(sum(r) for r in self.rows)

    def trace(self) -> int:
        return sum(
            row[i] for i, row in enumerate(self.rows) if i < len(row)
        )

    def descent_set(self) -> frozenset[Cell]:
        """Cells whose entry strictly exceeds the entry directly below."""
        return frozenset(
            Cell(i, j)
            for i, j in self.cells()
            if self.entry(i, j) > self.entry(i + 1, j)
        )

    def descent_count(self) -> int:
        return len(self.descent_set())

    def descent_level_sets(self) -> dict[tuple[int, int], frozenset[int]]:
        """D_{i,l}: the columns j where row i has value l and a descent.

        Only nonempty sets appear in the returned map.
        """
        out: dict[tuple[int, int], set[int]] = {}
        for i, j in self.descent_set():
            out.setdefault((i, self.entry(i, j)), set()).add(j)
        return {key: frozenset(v) for key, v in out.items()}

    def up_hook_volume(self) -> int:
        """Sum of (entry + row - 1) over descent cells."""
        return sum(self.entry(i, j) + i - 1 for i, j in self.descent_set())

    def corner_volume(self) -> int:
        """Sum of entries over descent cells."""
        return sum(self.entry(i, j) for i, j in self.descent_set())

    def column_counts(self, m: int) -> tuple[int, ...]:
        """c_i for i = 1..m: the number of columns containing value i."""
        if self.max_entry() > m:
            raise ValueError("value out of range")
        counts = [0] * m
        width = len(self.rows[0]) if self.rows else 0
        for j in range(1, width + 1):
            seen = {self.entry(i, j) for i in range(1, len(self.rows) + 1)}
            seen.discard(0)
            for v in seen:
                counts[v - 1] += 1
        return tuple(counts)

    def row_descent_counts(self) -> tuple[int, ...]:
        """d_i: the number of descent cells in row i."""
        counts = [0] * len(self.rows)
        for i, j in self.descent_set():
            counts[i - 1] += 1
        return tuple(counts)

    def add(self, other: "PlanePartition") -> "PlanePartition":
        """Entrywise sum; absent cells read 0."""
        n = max(len(self.rows), len(other.rows))
        rows = []
        for i in range(1, n + 1):
            w = max(
                len(self.rows[i - 1]) if i <= len(self.rows) else 0,
                len(other.rows[i - 1]) if i <= len(other.rows) else 0,
            )
            rows.append([self.entry(i, j) + other.entry(i, j) for j in range(1, w + 1)])
        return PlanePartition(rows)

    def scale(self, k: int) -> "PlanePartition":
        """Every entry multiplied by k >= 1; the descent set is unchanged."""
        if k < 1:
            raise ValueError("scale factor must be positive")
        return PlanePartition([[k * v for v in row] for row in self.rows])

    def fits_box(self, k: int, n: int, m: int) -> bool:
        """First row <= k columns, <= n rows, entries <= m."""
        if not self.rows:
            return True
        return len(self.rows) <= n and len(self.rows[0]) <= k and self.rows[0][0] <= m

    def exact_base(self, k: int, n: int, m: int) -> bool:
        """Base shape exactly the k x n rectangle (n rows, every row of
        length k), entries <= m.
        """
        if not self.rows:
            return k == 0 and n == 0
        return (
            len(self.rows) == n
            and len(self.rows[0]) == k
            and len(self.rows[-1]) == k
            and self.rows[0][0] <= m
        )

    def to_json(self) -> list:
        return [list(r) for r in self.rows]

    @staticmethod
    def from_json(data) -> "PlanePartition":
        return PlanePartition(data)


class NMatrix:
    """A rectangular grid of nonnegative integers with explicit dimensions.

    Zero rows and columns are permitted; the dimensions are part of the
    value's identity.
    """

    __slots__ = ("n_rows", "n_cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]], n_rows: int | None = None,
                 n_cols: int | None = None):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        if n_rows is None:
            n_rows = len(rows)
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
            raise ValueError("ragged or mis-sized matrix")
        if any(v < 0 for r in rows for v in r):
            raise ValueError("entries must be nonnegative")
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.entries = rows

    @staticmethod
    def zero(n_rows: int, n_cols: int) -> "NMatrix":
        return NMatrix([[0] * n_cols for _ in range(n_rows)], n_rows, n_cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NMatrix)
            and self.n_rows == other.n_rows
            and self.n_cols == other.n_cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash(("NMatrix", self.n_rows, self.n_cols, self.entries))

    def __repr__(self) -> str:
        return f"NMatrix({[list(r) for r in self.entries]})"

    def entry(self, i: int, j: int) -> int:
        """Entry at (i, j), 1-based."""
        return self.entries[i - 1][j - 1]

    def total(self) -> int:
        return sum(sum(r) for r in self.entries)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.entries)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.entries)) if self.entries else ()

    def to_json(self) -> dict:
        return {
            "rows": self.n_rows,
            "cols": self.n_cols,
            "data": [list(r) for r in self.entries],
        }

    @staticmethod
    def from_json(data) -> "NMatrix":
        return NMatrix(data["data"], data["rows"], data["cols"])


class Word:
    """A finite sequence of letters from the alphabet {1, ..., m}."""

    __slots__ = ("letters", "m")

    def __init__(self, letters: Iterable[int], m: int):
        letters = tuple(int(v) for v in letters)
        if m < 1:
            raise ValueError("alphabet size must be positive")
        if any(not 1 <= v <= m for v in letters):
            raise ValueError("letter out of alphabet range")
        self.letters = letters
        self.m = m

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters and self.m == other.m

    def __hash__(self) -> int:
        return hash(("Word", self.letters, self.m))

    def __repr__(self) -> str:
        return f"Word({''.join(map(str, self.letters))}, m={self.m})"

    @staticmethod
    def from_digits(s: str, m: int) -> "Word":
        """Parse a word from a digit string like '132434'."""
        return Word([int(c) for c in s], m)

    def to_json(self) -> dict:
        return {"m": self.m, "letters": list(self.letters)}

    @staticmethod
    def from_json(data) -> "Word":
        return Word(data["letters"], data["m"])

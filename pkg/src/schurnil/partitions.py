"""Integer partitions and Young-diagram shape calculus.

A partition is a weakly decreasing sequence of positive integers.  It is
the universal index of this package: shapes, cycle types of permutations,
and rectangle bounds are all partitions.  Everything here is exact integer
combinatorics; values are immutable and safe to share between workers.
"""

from __future__ import annotations

from typing import Callable, Iterator, NamedTuple


class Partition:
    """An integer partition as an immutable value type.

    Structural equality and hashing are by the tuple of parts, so
    partitions can key caches and live in sets.  The empty partition is
    valid and has size 0.
    """

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i > 0 and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        self.parts = parts

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated syntax used by the CLI and JSON.

        ``"3,1,1"`` is the partition (3,1,1); the empty string and ``"0"``
        both denote the empty partition.
        """
        text = text.strip()
        if text in ("", "0"):
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"cannot parse partition from {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        if not self.parts:
            return "0"
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        # Reverse-lexicographic within a size; mainly for stable sorting.
        return self.parts > other.parts

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def cols(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        cols = [0] * self.cols
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """Young-diagram inclusion: every row of ``other`` fits in ours."""
        if other.rows > self.rows:
            return False
        return all(o <= s for s, o in zip(self.parts, other.parts))

    def is_hook(self) -> bool:
        """True iff the shape is (n-j, 1^j), i.e. avoids the 2x2 square."""
        return len(self.parts) == 0 or len(self.parts) == 1 or self.parts[1] <= 1

    def contents(self) -> list[int]:
        """Multiset of cell contents j - i (1-based rows i, columns j)."""
        out = []
        for i, p in enumerate(self.parts):
            for j in range(p):
                out.append(j - i)
        return out

    def hook_lengths(self) -> list[int]:
        """Multiset of hook lengths, one per cell."""
        conj = self.conjugate().parts
        out = []
        for i, p in enumerate(self.parts):
            for j in range(p):
                out.append((p - j) + (conj[j] - i) - 1)
        return out


class HookSplit(NamedTuple):
    s: int
    nu: Partition
    delta: Partition


def big_hook_split(lam: Partition) -> HookSplit:
    """Split a shape into its biggest hook and the leftover shape.

    The biggest hook nu is the first row plus the first column; its length
    is s = rows + cols - 1.  The leftover delta is what remains after
    deleting the first row and the first column of the diagram, i.e.
    (lam_2 - 1, lam_3 - 1, ...) with zero parts dropped.  |delta| = |lam| - s,
    and delta is empty exactly when lam is a hook.
    """
    if not lam.parts:
        raise ValueError("big_hook_split requires a nonempty partition")
    s = lam.rows + lam.cols - 1
    nu = Partition([lam.cols] + [1] * (lam.rows - 1))
    delta = Partition([p - 1 for p in lam.parts[1:] if p > 1])
    return HookSplit(s, nu, delta)


def rectangle(rows: int, cols: int) -> Partition:
    """The rectangular shape with ``rows`` parts each equal to ``cols``."""
    if rows < 0 or cols < 0:
        raise ValueError("rectangle dimensions must be non-negative")
    if rows == 0 or cols == 0:
        return Partition()
    return Partition([cols] * rows)


def enumerate_partitions(
    n: int, pred: Callable[[Partition], bool] | None = None
) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order.

    (n) comes first and (1^n) last.  An optional predicate filters the
    stream.  n = 0 yields only the empty partition.
    """
    if n < 0:
        raise ValueError("cannot enumerate partitions of a negative integer")
    if n == 0:
        empty = Partition()
        if pred is None or pred(empty):
            yield empty
        return
    parts = [n]
    while True:
        cand = Partition(parts)
        if pred is None or pred(cand):
            yield cand
        # Find the rightmost part > 1, decrement it, and redistribute the
        # tail greedily under the new cap.
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        rest = parts[i] + (len(parts) - i - 1)
        cap = parts[i] - 1
        parts = parts[:i]
        while rest > 0:
            take = min(cap, rest)
            parts.append(take)
            rest -= take

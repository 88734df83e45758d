"""Young-diagram combinatorics.

Boxes are indexed ``(i, j)`` with row ``i`` and column ``j`` both starting at 1;
the content of a box is ``j - i``.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache, total_ordering
from math import factorial, prod
from typing import Dict, Iterator, List, Tuple

from .algebra import ParamScalar, as_scalar, const

__all__ = [
    "Partition",
    "NotContained",
    "parse_partition",
    "partitions_of",
    "partitions_up_to",
    "subpartitions",
    "contents",
    "hooks",
    "xi",
    "xi_ratio",
    "restricted_size",
    "bracket",
    "rows_interact",
    "z_lambda",
    "dominates",
]


class NotContained(ValueError):
    """Raised when a skew shape R/Q is requested with Q not inside R."""


@total_ordering
class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Ordered by size, then reverse-lexicographically, so that ``[2] < [1,1]``.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """Row ``i`` (1-based); zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def boxes(self) -> Iterator[Tuple[int, int]]:
        for i, r in enumerate(self, start=1):
            for j in range(1, r + 1):
                yield (i, j)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for r in self if r >= j) for j in range(1, self[0] + 1))

    def contains(self, other: "Partition") -> bool:
        other = Partition(other)
        return len(other) <= len(self) and all(q <= r for q, r in zip(other, self))

    def add_box(self, i: int) -> "Partition | None":
        """Add a box in row ``i``; None if the result is not a partition."""
        parts = list(self) + [0]
        if i > len(self) + 1:
            return None
        parts[i - 1] += 1
        if i > 1 and parts[i - 1] > parts[i - 2]:
            return None
        return Partition(parts)

    def remove_box(self, i: int) -> "Partition | None":
        if i > len(self):
            return None
        parts = list(self)
        parts[i - 1] -= 1
        if i < len(self) and parts[i - 1] < parts[i]:
            return None
        return Partition(parts)

    def addable(self) -> List[Tuple[int, int]]:
        """Boxes ``(i, j)`` that can be added."""
        return [(i, self.part(i) + 1) for i in range(1, len(self) + 2) if self.add_box(i) is not None]

    def removable(self) -> List[Tuple[int, int]]:
        return [(i, self.part(i)) for i in range(1, len(self) + 1) if self.remove_box(i) is not None]

    def _key(self):
        return (self.size, tuple(-p for p in self))

    def __lt__(self, other):
        return self._key() < Partition(other)._key()

    def __eq__(self, other):
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return tuple.__hash__(self)

    def __repr__(self):
        return "[" + ",".join(map(str, self)) + "]"

    def __str__(self):
        return ",".join(map(str, self))


def parse_partition(text: str) -> Partition:
    """Parse ``"4,3,2"``; the empty string (or ``[]``) is the empty partition."""
    text = text.strip().strip("[]").strip()
    if not text:
        return Partition()
    return Partition(int(x) for x in text.split(","))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> Tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_up_to(max_size: int, max_length: int | None = None) -> List[Partition]:
    out = []
    for n in range(max_size + 1):
        out.extend(p for p in partitions_of(n) if max_length is None or len(p) <= max_length)
    return out


def subpartitions(R: Partition, max_length: int | None = None) -> List[Partition]:
    """All Q contained in R (sorted)."""
    R = Partition(R)

    def rec(i: int, bound: int) -> Iterator[Tuple[int, ...]]:
        if i == len(R):
            yield ()
            return
        for q in range(min(R[i], bound), -1, -1):
            for rest in rec(i + 1, q):
                yield (q,) + rest

    out = {Partition(q) for q in rec(0, R[0] if R else 0)}
    if max_length is not None:
        out = {q for q in out if len(q) <= max_length}
    return sorted(out)


def contents(R: Partition) -> Dict[Tuple[int, int], int]:
    return {(i, j): j - i for (i, j) in Partition(R).boxes()}


def hooks(R: Partition) -> List[int]:
    R = Partition(R)
    Rc = R.conjugate()
    return [(R[i - 1] - j) + (Rc[j - 1] - i) + 1 for (i, j) in R.boxes()]


def _box_product(boxes, z: ParamScalar, sign: int) -> ParamScalar:
    result = const(1)
    for (i, j) in boxes:
        result = result * (z + sign * (j - i))
    return result


def xi(R: Partition, z) -> ParamScalar:
    """Content product ``prod_{(i,j) in R} (z + j - i)``."""
    return _box_product(Partition(R).boxes(), as_scalar(z), 1)


def _check_contained(R: Partition, Q: Partition) -> Tuple[Partition, Partition]:
    R, Q = Partition(R), Partition(Q)
    if not R.contains(Q):
        raise NotContained(f"{Q!r} is not contained in {R!r}")
    return R, Q


def skew_boxes(R: Partition, Q: Partition) -> List[Tuple[int, int]]:
    R, Q = _check_contained(R, Q)
    return [(i, j) for (i, j) in R.boxes() if j > Q.part(i)]


def xi_ratio(R: Partition, Q: Partition, z, transposed: bool = False) -> ParamScalar:
    """Product over the boxes of R/Q of ``z + j - i`` (or ``z + i - j`` if transposed)."""
    return _box_product(skew_boxes(R, Q), as_scalar(z), -1 if transposed else 1)


def restricted_size(R: Partition, Q: Partition) -> int:
    """Sum of the rows of Q that differ from the corresponding rows of R."""
    R, Q = _check_contained(R, Q)
    return sum(q for k, q in enumerate(Q, start=1) if q != R.part(k))


def bracket(x: int, s: int, a: int) -> int:
    """``x`` if ``x = a (mod s)``, else 1."""
    if s < 1:
        raise ValueError("modulus must be positive")
    return x if (x - a) % s == 0 else 1


def rows_interact(R: Partition, Q: Partition) -> bool:
    """False iff ``Q_i < R_{i+1}`` for every row ``i < l(R)`` (rows of R/Q disconnected)."""
    R, Q = _check_contained(R, Q)
    return not all(Q.part(i) < R.part(i + 1) for i in range(1, len(R)))


def z_lambda(lam: Partition) -> int:
    """``prod_k k^{m_k} m_k!`` -- the norm of ``p_lambda`` in the Hall pairing."""
    return prod(k ** m * factorial(m) for k, m in Counter(lam).items())


def dominates(R: Partition, Q: Partition) -> bool:
    """True iff R >= Q in dominance order (same size assumed)."""
    acc_r = acc_q = 0
    for k in range(max(len(R), len(Q))):
        acc_r += R.part(k + 1)
        acc_q += Q.part(k + 1)
        if acc_r < acc_q:
            return False
    return True

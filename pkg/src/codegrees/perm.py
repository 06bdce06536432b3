"""Permutations on {0, ..., n-1} with cycle-notation I/O.

Composition convention, fixed globally: (p * q)(i) = p(q(i)), i.e. q is
applied first.  Points are 0-based internally; cycle notation used for
parsing and printing is 1-based.
"""

from __future__ import annotations

import re
from math import gcd
from typing import Iterable, Sequence


class DegreeMismatchError(ValueError):
    """Raised when combining permutations of different degrees."""


class Permutation:
    """An immutable permutation of {0, ..., degree-1}."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        object.__setattr__(self, "images", images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 0-based cycles, e.g. from_cycles(4, [(0, 1, 2)])."""
        images = list(range(degree))
        for cycle in cycles:
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle {cycle!r}")
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return Permutation(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose: (self * other)(i) = self(other(i))."""
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"degree {self.degree} vs {other.degree}")
        img = self.images
        return Permutation(tuple(img[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return by * self * by^{-1}."""
        return by * self * by.inverse()

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted cycle lengths including fixed points."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths))

    def order(self) -> int:
        n = 1
        for c in self.cycles():
            n = n * len(c) // gcd(n, len(c))
        return n

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({print_cycles(self)!r}, degree={self.degree})"


def print_cycles(p: Permutation) -> str:
    """Cycle notation with 1-based points; the identity prints as "()"."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join(
        "(" + ",".join(str(i + 1) for i in c) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse 1-based cycle notation, e.g. "(1,2)(3,4,5)".

    Whitespace-insensitive.  If degree is omitted, the largest point
    mentioned determines it.
    """
    stripped = re.sub(r"\s+", "", text)
    pos = 0
    cycles: list[list[int]] = []
    for m in _CYCLE_RE.finditer(stripped):
        if m.start() != pos:
            raise ValueError(
                f"cannot parse permutation {text!r} at position {m.start()}")
        pos = m.end()
        if m.group(1):
            points = [int(s) - 1 for s in m.group(1).split(",")]
            if any(pt < 0 for pt in points):
                raise ValueError(f"points must be >= 1 in {text!r}")
            cycles.append(points)
    if pos != len(stripped):
        raise ValueError(f"cannot parse permutation {text!r} at position {pos}")
    needed = 1 + max((max(c) for c in cycles), default=-1)
    if degree is None:
        degree = needed
    elif needed > degree:
        raise ValueError(f"point {needed} exceeds degree {degree} in {text!r}")
    return Permutation.from_cycles(degree, cycles)

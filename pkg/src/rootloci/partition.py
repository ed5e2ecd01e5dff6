"""Integer partitions in part-list and exponent (1^e1 2^e2 ... r^er) form."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterator, Sequence, Tuple


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]
    evec: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if not parts:
            raise ValueError("empty partition")
        if parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)
        r = parts[0]
        evec = [0] * r
        for p in parts:
            evec[p - 1] += 1
        object.__setattr__(self, "evec", tuple(evec))

    @classmethod
    def from_evec(cls, evec: Sequence[int]) -> "Partition":
        evec = list(evec)
        while evec and evec[-1] == 0:
            evec.pop()
        if any(e < 0 for e in evec):
            raise ValueError("negative multiplicity")
        parts = [i + 1 for i, e in enumerate(evec) for _ in range(e)]
        return cls(tuple(parts))

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def r(self) -> int:
        return self.parts[0]

    @property
    def codim(self) -> int:
        return self.d - self.n

    def blocks(self):
        """(i, e_i) for every nonzero multiplicity."""
        return [(i + 1, e) for i, e in enumerate(self.evec) if e]

    def exponent_notation(self) -> str:
        out = []
        for i, e in self.blocks():
            out.append(str(i) if e == 1 else f"{i}^{e}")
        return " ".join(out)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(d: int) -> Iterator[Partition]:
    """All partitions of d in reverse-lexicographic order, (d) first."""
    if d < 1:
        return

    def rec(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - p, p):
                yield (p,) + rest

    for parts in rec(d, d):
        yield Partition(parts)


def hilbert_degree(lam: Partition) -> int:
    """n!/prod(e_i!) * prod(i^e_i)."""
    num = factorial(lam.n)
    den = 1
    mult = 1
    for i, e in lam.blocks():
        den *= factorial(e)
        mult *= i ** e
    return num // den * mult

"""Seeded random graphs on a portable generator.

The generator is xorshift64*: state' = state with three xor-shifts (>>12,
<<25, >>27), output = state' * 2685821657736338717 mod 2^64. Spelled out so
fixtures reproduce bit-for-bit anywhere."""

from __future__ import annotations

from .graphs import Graph

_MASK64 = (1 << 64) - 1
_MULT = 2685821657736338717


class Xorshift64Star:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = (seed & _MASK64) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= (x >> 12)
        x = (x ^ (x << 25)) & _MASK64
        x ^= (x >> 27)
        self.state = x
        return (x * _MULT) & _MASK64

    def random(self) -> float:
        """Uniform in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def randrange(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound


def generate_random(n: int, p: float, seed: int) -> Graph:
    """Independent-edge random graph: each pair kept with probability p, in
    lexicographic pair order, deterministic per seed."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rng = Xorshift64Star(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)

"""Named, splittable, reproducible randomness.

Every random draw descends from one integer seed through a path of labels, so
a result depends only on (seed, path) and never on evaluation order.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

MAX_ENTRY = 10
MAX_DENOMINATOR = 7


@dataclass(frozen=True)
class SeedStream:
    seed: int
    path: tuple[str, ...] = ()

    def child(self, *labels) -> SeedStream:
        return SeedStream(self.seed, self.path + tuple(str(x) for x in labels))

    def rng(self) -> random.Random:
        digest = hashlib.sha256(repr((self.seed, self.path)).encode()).digest()
        return random.Random(int.from_bytes(digest[:16], "big"))


def random_rational(rng: random.Random) -> Fraction:
    den = rng.randint(1, MAX_DENOMINATOR)
    return Fraction(rng.randint(-MAX_ENTRY * den, MAX_ENTRY * den), den)


def random_matrix(rows: int, cols: int, rng: random.Random) -> list[list[Fraction]]:
    """Entries uniform-ish rationals in [-10, 10] with denominators at most 7."""
    return [[random_rational(rng) for _ in range(cols)] for _ in range(rows)]

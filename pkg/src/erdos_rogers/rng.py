"""Deterministic, labeled random streams.

Every randomized operation in this package draws from a SeededRng.  The
generator is counter based: word i of the stream labeled (seed, label) is
a slice of blake2b(seed || label || block_index), so the value sequence
depends only on (seed, label, counter) and is identical on every platform.
Substreams are derived by extending the label, never by drawing from the
parent, so sibling substreams are independent of consumption order.
"""

import hashlib

import numpy as np

_MASK64 = (1 << 64) - 1
_FLOAT_SCALE = 2.0 ** -53


class SeededRng:
    """Counter-based deterministic RNG keyed by (seed, label, counter)."""

    __slots__ = ("seed", "label", "_key", "_block", "_buf", "_pos")

    def __init__(self, seed, label="root"):
        self.seed = int(seed) & _MASK64
        self.label = str(label)
        material = self.seed.to_bytes(8, "little") + b"\x1f" + self.label.encode("utf-8")
        self._key = hashlib.blake2b(material, digest_size=32).digest()
        self._block = 0
        self._buf = ()
        self._pos = 0

    def substream(self, label):
        """A fresh independent stream for the given sub-label."""
        return SeededRng(self.seed, f"{self.label}/{label}")

    def state(self):
        """Seed record suitable for a certificate."""
        return {"seed": self.seed, "label": self.label}

    def _refill(self):
        raw = hashlib.blake2b(
            self._block.to_bytes(8, "little"), key=self._key, digest_size=64
        ).digest()
        self._block += 1
        self._buf = tuple(
            int.from_bytes(raw[i : i + 8], "little") for i in range(0, 64, 8)
        )
        self._pos = 0

    def u64(self):
        if self._pos >= len(self._buf):
            self._refill()
        value = self._buf[self._pos]
        self._pos += 1
        return value

    def random(self):
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.u64() >> 11) * _FLOAT_SCALE

    def randrange(self, n):
        """Uniform integer in [0, n), unbiased via rejection."""
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        limit = _MASK64 + 1 - ((_MASK64 + 1) % n)
        while True:
            value = self.u64()
            if value < limit:
                return value % n

    def randint(self, a, b):
        """Uniform integer in [a, b], both ends included."""
        return a + self.randrange(b - a + 1)

    def choice(self, seq):
        if not seq:
            raise ValueError("choice from empty sequence")
        return seq[self.randrange(len(seq))]

    def shuffle(self, items):
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, population, k):
        """k distinct items, order randomized (partial Fisher-Yates)."""
        items = list(population)
        if k > len(items):
            raise ValueError("sample larger than population")
        for i in range(k):
            j = i + self.randrange(len(items) - i)
            items[i], items[j] = items[j], items[i]
        return items[:k]

    def numpy_rng(self):
        """A numpy Generator on a Philox stream keyed by (seed, label).

        Philox is itself counter based, so bulk draws stay platform stable.
        The key is derived from a disjoint hash domain, so mixing scalar and
        bulk draws from the same SeededRng cannot alias.
        """
        raw = hashlib.blake2b(b"numpy", key=self._key, digest_size=32).digest()
        key = int.from_bytes(raw[:16], "little")
        return np.random.Generator(np.random.Philox(key=key))

    def __repr__(self):
        return f"SeededRng(seed={self.seed}, label={self.label!r})"

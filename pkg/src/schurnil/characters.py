"""Irreducible symmetric-group characters and class data, all exact.

Character values are computed by the Murnaghan-Nakayama recursion: strip a
border strip whose length is the largest remaining cycle length, weight by
(-1)^(rows spanned - 1), and recurse.  Removable strips are enumerated on
the beta-number (first-column hook length) encoding of the shape, where
removing a strip of length L means lowering one beta number by L into a
free slot; the strip's start row is the row of that beta number and its
height is the count of beta numbers jumped over.

Values depend only on the cycle type, are always integers, and are
memoized on the canonical (shape, sorted cycle type) pair.  The memo is a
plain dict of idempotent writes: the function is pure, so concurrent
lookups and re-insertions of identical values are harmless, and forked
workers simply grow private copies.
"""

from __future__ import annotations

import json
from math import factorial

from .partitions import Partition, enumerate_partitions


class CharacterCache:
    """Permanent memo map (shape, cycle type) -> character value."""

    def __init__(self):
        self.entries: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}

    def __len__(self) -> int:
        return len(self.entries)

    def clear(self) -> None:
        self.entries.clear()


_default_cache = CharacterCache()


def default_cache() -> CharacterCache:
    return _default_cache


def z_order(mu: Partition) -> int:
    """Centralizer order of the class with cycle type mu: prod l^m_l * m_l!."""
    mult: dict[int, int] = {}
    for part in mu.parts:
        mult[part] = mult.get(part, 0) + 1
    z = 1
    for length, m in mult.items():
        z *= length**m * factorial(m)
    return z


def class_size(mu: Partition) -> int:
    """Number of permutations with cycle type mu: n! / z_order(mu)."""
    n = mu.size
    z = z_order(mu)
    size, rem = divmod(factorial(n), z)
    assert rem == 0
    return size


def _strip_removals(parts: tuple[int, ...], length: int):
    """All ways to remove a border strip of ``length`` cells from a shape.

    Yields (remaining shape, strip height) pairs; height = rows spanned - 1.
    """
    k = len(parts)
    beta = [parts[i] + (k - 1 - i) for i in range(k)]
    bset = set(beta)
    for b in beta:
        nb = b - length
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        nbeta = sorted([c for c in beta if c != b] + [nb], reverse=True)
        sub = [nbeta[j] - (k - 1 - j) for j in range(k)]
        while sub and sub[-1] == 0:
            sub.pop()
        yield tuple(sub), height


def _mn(lam: tuple[int, ...], mu: tuple[int, ...], memo) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    cached = memo.get(key)
    if cached is not None:
        return cached
    rest = mu[1:]
    total = 0
    for sub, height in _strip_removals(lam, mu[0]):
        value = _mn(sub, rest, memo)
        total += -value if height % 2 else value
    memo[key] = total
    return total


def character(lam: Partition, mu: Partition, cache: CharacterCache | None = None) -> int:
    """Character of the irreducible indexed by lam at the class of type mu."""
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| = {lam.size} but |{mu}| = {mu.size}")
    memo = (cache or _default_cache).entries
    return _mn(lam.parts, mu.parts, memo)


def mn_vanishing_check(lam: Partition, mu: Partition) -> bool:
    """True when the longest cycle exceeds the biggest hook of the shape.

    Whenever this holds no border strip of that length is removable, so the
    character is forced to vanish.
    """
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| = {lam.size} but |{mu}| = {mu.size}")
    if not mu.parts:
        return False
    return mu.cols > lam.rows + lam.cols - 1


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible: n! divided by the product of hook lengths."""
    if not lam.parts:
        raise ValueError("dimension requires a nonempty partition")
    prod = 1
    for h in lam.hook_lengths():
        prod *= h
    dim, rem = divmod(factorial(lam.size), prod)
    assert rem == 0
    return dim


def character_table(n: int, cache: CharacterCache | None = None) -> dict[Partition, dict[Partition, int]]:
    """Full table chi_lam(mu) for all lam, mu of n, in enumeration order."""
    classes = list(enumerate_partitions(n))
    return {
        lam: {mu: character(lam, mu, cache) for mu in classes}
        for lam in classes
    }


# -- optional on-disk persistence of the memo ------------------------------

CACHE_FORMAT = "schurnil-character-cache"
CACHE_VERSION = 1
CACHE_FILENAME = f"characters-v{CACHE_VERSION}.json"


def save_cache_file(path: str, cache: CharacterCache | None = None) -> int:
    """Write the memo as JSON; returns the number of entries written.

    The file carries a format/version header and stores values as decimal
    strings keyed by the partition text syntax, sorted for determinism.
    """
    cache = cache or _default_cache
    entries = sorted(cache.entries.items())
    payload = {
        "format": CACHE_FORMAT,
        "version": CACHE_VERSION,
        "entries": [
            [str(Partition(lam)), str(Partition(mu)), str(value)]
            for (lam, mu), value in entries
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
    return len(entries)


def load_cache_file(path: str, cache: CharacterCache | None = None) -> int:
    """Merge a previously saved memo; returns the number of entries loaded.

    Raises ValueError if the header or any entry fails the integrity check.
    """
    cache = cache or _default_cache
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    if not isinstance(payload, dict) or payload.get("format") != CACHE_FORMAT:
        raise ValueError(f"{path}: not a {CACHE_FORMAT} file")
    if payload.get("version") != CACHE_VERSION:
        raise ValueError(f"{path}: unsupported cache version {payload.get('version')!r}")
    loaded = 0
    for item in payload.get("entries", []):
        lam_text, mu_text, value_text = item
        lam = Partition.parse(lam_text)
        mu = Partition.parse(mu_text)
        cache.entries[(lam.parts, mu.parts)] = int(value_text)
        loaded += 1
    return loaded

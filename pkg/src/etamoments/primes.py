"""Prime tables, von Mangoldt jump data, and small Moebius values.

The sieve is a segmented, odd-only sieve of Eratosthenes with numpy masks.
Segment size is tuned to ~256 KiB of odd flags so the hot loop stays in L2
cache; limits up to 10^8 run in seconds. Tables can be persisted to a small
binary cache file (magic ``PTAB0001``) keyed by the sieve limit.
"""

from __future__ import annotations

import logging
import math
import os
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import CacheError, InvalidArgumentError

log = logging.getLogger(__name__)

SIEVE_LIMIT_MAX = 2**32  # documented ceiling; larger limits are out of scope

CACHE_MAGIC = b"PTAB0001"

# ~256 KiB of odd flags per segment -> spans ~4.2M integers
_SEGMENT_ODDS = 1 << 21


@dataclass(frozen=True)
class PrimeTable:
    """Ascending primes <= limit, plus where the table came from."""

    limit: int
    primes: np.ndarray  # int64, strictly ascending, first element 2
    source: str = "fresh"  # "fresh" | "cache"

    def __len__(self) -> int:
        return int(self.primes.size)


def _check_limit(limit: int) -> int:
    limit = int(limit)
    if limit < 2:
        raise InvalidArgumentError(f"sieve limit must be >= 2, got {limit}")
    if limit > SIEVE_LIMIT_MAX:
        raise InvalidArgumentError(f"sieve limit must be <= 2^32, got {limit}")
    return limit


def _odd_sieve_block(low: int, high: int, base: np.ndarray) -> np.ndarray:
    """Primes in [low, high) assuming low odd, using odd base primes."""
    count = (high - low + 1) // 2
    mask = np.ones(count, dtype=bool)
    for p in base:
        p = int(p)
        start = max(p * p, ((low + p - 1) // p) * p)
        if start >= high:
            if p * p >= high:
                break
            continue
        if start % 2 == 0:
            start += p
        if start >= high:
            continue
        mask[(start - low) // 2 :: p] = False
    return low + 2 * np.flatnonzero(mask).astype(np.int64)


def sieve_primes(limit: int) -> PrimeTable:
    """All primes <= limit, ascending, by segmented sieve.

    Deterministic for a given limit; raises InvalidArgumentError for
    limit < 2 or beyond the 2^32 ceiling.
    """
    limit = _check_limit(limit)
    if limit < 3:
        return PrimeTable(limit, np.array([2], dtype=np.int64))

    # base primes up to sqrt(limit) by a plain boolean sieve
    root = math.isqrt(limit)
    flags = np.ones(root + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(root) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    base = np.flatnonzero(flags).astype(np.int64)
    odd_base = base[base > 2]

    chunks = [np.array([2], dtype=np.int64)]
    span = 2 * _SEGMENT_ODDS
    low = 3
    while low <= limit:
        high = min(low + span, limit + 1)
        chunks.append(_odd_sieve_block(low, high, odd_base))
        low = high
    primes = np.concatenate(chunks)
    return PrimeTable(limit, primes)


def mangoldt_jumps(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """Positions and weights of the von Mangoldt jumps up to limit.

    Returns ascending prime powers p^w <= limit paired with weight log p;
    integers with zero weight are omitted.
    """
    limit = _check_limit(limit)
    table = sieve_primes(limit)
    positions = [table.primes]
    weights = [np.log(table.primes.astype(np.float64))]
    w = 2
    while 2**w <= limit:
        root = int(limit ** (1.0 / w))
        while (root + 1) ** w <= limit:  # guard float root truncation
            root += 1
        while root**w > limit:
            root -= 1
        ps = table.primes[table.primes <= root]
        if ps.size == 0:
            break
        positions.append(ps**w)
        weights.append(np.log(ps.astype(np.float64)))
        w += 1
    pos = np.concatenate(positions)
    wts = np.concatenate(weights)
    order = np.argsort(pos, kind="stable")
    return pos[order], wts[order]


def mobius_small(k: int) -> int:
    """Moebius mu(k) by trial factorization, for 1 <= k <= 64."""
    k = int(k)
    if k < 1 or k > 64:
        raise InvalidArgumentError(f"mobius_small expects 1 <= k <= 64, got {k}")
    result = 1
    d = 2
    while d * d <= k:
        if k % d == 0:
            k //= d
            if k % d == 0:
                return 0
            result = -result
        d += 1
    if k > 1:
        result = -result
    return result


# ---------------------------------------------------------------------------
# cache file: magic "PTAB0001", limit u64le, count u64le, primes u64le each
# ---------------------------------------------------------------------------


def cache_path(cache_dir: str | os.PathLike, limit: int) -> Path:
    return Path(cache_dir) / f"primes-{int(limit)}.ptab"


def write_prime_cache(table: PrimeTable, cache_dir: str | os.PathLike) -> Path:
    """Persist a table; returns the file path. Overwrites atomically."""
    path = cache_path(cache_dir, table.limit)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".ptab.tmp")
    with open(tmp, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<QQ", table.limit, table.primes.size))
        fh.write(table.primes.astype("<u8").tobytes())
    os.replace(tmp, path)
    return path


def read_prime_cache(limit: int, cache_dir: str | os.PathLike) -> PrimeTable:
    """Load a cached table, validating magic, limit, and count."""
    path = cache_path(cache_dir, limit)
    if not path.is_file():
        raise CacheError(f"no cache file at {path}")
    try:
        with open(path, "rb") as fh:
            magic = fh.read(8)
            if magic != CACHE_MAGIC:
                raise CacheError(f"bad magic in {path}: {magic!r}")
            header = fh.read(16)
            if len(header) != 16:
                raise CacheError(f"truncated header in {path}")
            file_limit, count = struct.unpack("<QQ", header)
            if file_limit != limit:
                raise CacheError(f"limit mismatch in {path}: {file_limit} != {limit}")
            data = np.fromfile(fh, dtype="<u8")
    except OSError as exc:
        raise CacheError(f"cannot read {path}: {exc}") from exc
    if data.size != count:
        raise CacheError(f"count mismatch in {path}: header {count}, payload {data.size}")
    primes = data.astype(np.int64)
    if primes.size == 0 or primes[0] != 2 or np.any(np.diff(primes) <= 0) or primes[-1] > limit:
        raise CacheError(f"implausible prime payload in {path}")
    return PrimeTable(int(limit), primes, source="cache")


def load_primes(limit: int, cache_dir: str | os.PathLike | None = None) -> PrimeTable:
    """Cache-aware table load: read a valid cache file or sieve fresh.

    A corrupt cache is reported via logging and silently replaced by a
    fresh sieve (the cache is an accelerator, not a source of truth).
    """
    limit = _check_limit(limit)
    if cache_dir is not None and cache_path(cache_dir, limit).is_file():
        try:
            return read_prime_cache(limit, cache_dir)
        except CacheError as exc:
            log.warning("prime cache unusable (%s); sieving fresh", exc)
    return sieve_primes(limit)

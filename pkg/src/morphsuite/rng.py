"""Deterministic seed derivation.

Every randomized step derives its own generator from the run seed plus a
stable string key (usually a record or instance id), so independent records
can be processed in any order, or in parallel, without changing the output.
"""
import hashlib
import random


def derive_seed(*parts) -> int:
    """Collapse the parts into a stable unsigned 64-bit seed."""
    h = hashlib.blake2b(digest_size=8)
    for part in parts:
        h.update(str(part).encode("utf-8"))
        h.update(b"\x1f")
    return int.from_bytes(h.digest(), "big")


def make_rng(*parts) -> random.Random:
    return random.Random(derive_seed(*parts))

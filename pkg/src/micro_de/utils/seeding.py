"""Platform-stable seed derivation from integers and identifiers."""

import hashlib

SEED_BYTES = 8


def stable_int(*parts: object) -> int:
    """Hash the textual form of ``parts`` into a 63-bit non-negative integer.

    Only integers and strings are expected; their ``str`` forms do not depend
    on platform, locale or hash randomization.
    """
    payload = "\x1f".join(str(part) for part in parts).encode("utf-8")
    digest = hashlib.sha256(payload).digest()[:SEED_BYTES]
    return int.from_bytes(digest, "big") >> 1


def derive_seed(master_seed: int, cell_id: str, run_index: int) -> int:
    """Seed of run ``run_index`` in cell ``cell_id``."""
    return stable_int(int(master_seed), cell_id, int(run_index))

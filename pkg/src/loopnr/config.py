"""Run-time size bounds for constructors and enumerations.

Every exhaustive procedure in the library is gated by one of these caps
so that a bad spec string cannot wedge the process.  CLI flags win over
environment variables, which win over the defaults.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Bounds:
    max_n: int = 4096            # largest carrier any constructor will build
    max_matrix_size: int = 6561  # |base| ** (k*k) cap for matrix rings
    max_map_size: int = 4096     # carrier cap for map near-rings
    max_subloop_n: int = 24      # loop size cap for full subloop enumeration
    max_enum_n: int = 4096       # carrier cap for N-subloop / left-ideal lattices
    max_family_n: int = 64       # ring size cap for primitive-family enumeration
    max_families: int = 4096     # enumerated-family cap before LimitReached


# Environment knobs.  The three names used by the CLI flags come first;
# the rest exist so scripted runs can loosen an individual cap.
_ENV_FIELDS = {
    "LOOPNR_MAX_N": "max_n",
    "LOOPNR_MAX_SUBLOOPS": "max_subloop_n",
    "LOOPNR_MAX_FAMILIES": "max_families",
    "LOOPNR_MAX_FAMILY_N": "max_family_n",
    "LOOPNR_MAX_ENUM_N": "max_enum_n",
    "LOOPNR_MAX_MATRIX": "max_matrix_size",
    "LOOPNR_MAX_MAP": "max_map_size",
}


def bounds_from_env(base: Bounds | None = None, env=None) -> Bounds:
    """Overlay LOOPNR_* environment variables on ``base``."""
    out = base if base is not None else Bounds()
    mapping = os.environ if env is None else env
    updates = {}
    for var, field_name in _ENV_FIELDS.items():
        raw = mapping.get(var)
        if raw is None:
            continue
        try:
            updates[field_name] = int(raw)
        except ValueError:
            raise ValueError(f"{var} must be an integer, got {raw!r}") from None
    return replace(out, **updates) if updates else out


DEFAULT_BOUNDS = Bounds()

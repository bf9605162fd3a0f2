"""Report payloads for the command-line interface.

Reports are plain dicts serialized as canonical JSON (sorted keys,
compact separators, one trailing newline).  Every report carries a
"sha256" field computed over the canonical serialization of the
payload with the volatile keys ("sha256" itself and "timing")
removed, so repeated runs hash identically even when timed.
"""

from __future__ import annotations

import hashlib
import time

import numpy as np

from . import tables
from .config import DEFAULT_BOUNDS, Bounds
from .decomp import corner_signature, decompose_regular, verify_ks_uniqueness
from .errors import PreconditionFailed
from .homs import idempotent_kill_check, verify_local_transfer
from .io import canonical_json, kind_of, structure_sha256
from .loops import enumerate_subloops, is_associative, is_commutative
from .nearrings import enumerate_N_subloops, idempotents, is_local_lnr, units
from .rings import FiniteRing, is_semiperfect, is_semisimple, jacobson_radical

VOLATILE_KEYS = ("sha256", "timing")

# associativity and commutativity scans are cubic; skip them on loops
# larger than this when building reports
_LAW_SCAN_CAP = 256


def report_sha256(payload: dict) -> str:
    stable = {k: v for k, v in payload.items() if k not in VOLATILE_KEYS}
    return hashlib.sha256(canonical_json(stable).encode()).hexdigest()


def finalize_report(payload: dict) -> dict:
    payload["sha256"] = report_sha256(payload)
    return payload


def _subset_section(subset) -> dict:
    members = list(subset.sorted_members)
    return {"count": len(members), "members": members}


def _locality_section(structure, bounds: Bounds) -> dict:
    if not structure.zero_symmetric:
        return {"applicable": False, "reason": "not zero-symmetric"}
    rep = is_local_lnr(structure, bounds)
    return {
        "applicable": True,
        "is_local": rep.is_local,
        "via_maximal": rep.via_maximal,
        "via_units": rep.via_units,
        "maximal_count": len(rep.maximal_subloops),
        "maximal": [list(m.sorted_members) for m in rep.maximal_subloops],
        "nonunits_count": len(rep.nonunits.members),
        "j": None if rep.j is None else list(rep.j.sorted_members),
    }


def analysis_report(
    structure,
    name: str,
    *,
    with_subloops: bool = False,
    with_local: bool = False,
    with_radical: bool = False,
    with_idempotents: bool = False,
    with_timing: bool = False,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> dict:
    kind = kind_of(structure)
    payload = {
        "command": "analyze",
        "input": name,
        "kind": kind,
        "n": structure.n,
        "structure_sha256": structure_sha256(structure),
        "valid": True,
    }
    timing = {}

    def timed(key, fn):
        t0 = time.perf_counter()
        out = fn()
        timing[key] = round(time.perf_counter() - t0, 6)
        return out

    if kind == "loop":
        if structure.n <= _LAW_SCAN_CAP:
            payload["associative"] = bool(is_associative(structure))
            payload["commutative"] = bool(is_commutative(structure))
        if with_subloops:
            subs = timed("subloops", lambda: enumerate_subloops(structure, bounds))
            payload["subloops"] = {
                "count": len(subs),
                "sizes": sorted(len(s.members) for s in subs),
            }
    else:
        payload["one"] = structure.one
        payload["zero_symmetric"] = structure.zero_symmetric
        payload["units"] = timed(
            "units", lambda: _subset_section(units(structure).members)
        )
        if with_idempotents:
            payload["idempotents"] = timed(
                "idempotents", lambda: _subset_section(idempotents(structure))
            )
        if with_subloops:
            subs = timed(
                "n_subloops", lambda: enumerate_N_subloops(structure, bounds)
            )
            payload["n_subloops"] = {
                "count": len(subs),
                "sizes": sorted(len(s.members) for s in subs),
            }
        if with_local:
            payload["local"] = timed(
                "local", lambda: _locality_section(structure, bounds)
            )
        if with_radical and isinstance(structure, FiniteRing):
            ideal = timed("radical", lambda: jacobson_radical(structure, bounds))
            payload["radical"] = {
                "members": list(ideal.members.sorted_members),
                "size": len(ideal.members.members),
                "semisimple": is_semisimple(structure, bounds),
                "semiperfect": is_semiperfect(structure, bounds),
            }
    if with_timing:
        payload["timing"] = timing
    return finalize_report(payload)


def decompose_report(
    ring: FiniteRing,
    name: str,
    *,
    verify_uniqueness: bool = False,
    limit: int | None = None,
    with_timing: bool = False,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> dict:
    if not isinstance(ring, FiniteRing):
        raise PreconditionFailed("decomposition needs a ring input")
    timing = {}
    t0 = time.perf_counter()
    family = decompose_regular(ring, bounds)
    timing["decompose"] = round(time.perf_counter() - t0, 6)
    payload = {
        "command": "decompose",
        "input": name,
        "kind": "ring",
        "n": ring.n,
        "structure_sha256": structure_sha256(ring),
        "family": list(family.members),
        "corners": [
            {"e": e, "signature": list(corner_signature(ring, e))}
            for e in family.members
        ],
    }
    if verify_uniqueness:
        t0 = time.perf_counter()
        ks = verify_ks_uniqueness(ring, limit, bounds)
        timing["uniqueness"] = round(time.perf_counter() - t0, 6)
        payload["uniqueness"] = {
            "family_count": ks.family_count,
            "common_length": ks.common_length,
            "families": [list(f) for f in ks.families],
            "class_labels": [list(l) for l in ks.class_labels],
            "signature_multiset": [list(s) for s in ks.signature_multiset],
            "matched": ks.matched,
        }
    if with_timing:
        payload["timing"] = timing
    return finalize_report(payload)


def hom_report(
    hom,
    source_name: str,
    target_name: str,
    *,
    with_transfer: bool = False,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> dict:
    payload = {
        "command": "hom",
        "source": {
            "input": source_name,
            "kind": kind_of(hom.source),
            "n": hom.source.n,
            "structure_sha256": structure_sha256(hom.source),
        },
        "target": {
            "input": target_name,
            "kind": kind_of(hom.target),
            "n": hom.target.n,
            "structure_sha256": structure_sha256(hom.target),
        },
        "valid": True,
        "nontrivial": hom.nontrivial,
        "unit_reflecting": hom.unit_reflecting,
        "idempotent_lifting": hom.idempotent_lifting,
        "kernel_size": len(hom.kernel.members),
        "image_size": len(hom.image.members),
    }
    if with_transfer:
        rep = verify_local_transfer(hom, bounds)
        payload["transfer"] = {
            "source_local": rep.source_local,
            "image_local": rep.image_local,
            "agree": rep.agree,
            "unit_reflecting_into_target": rep.unit_reflecting_into_target,
            "unit_reflecting_onto_image": rep.unit_reflecting_onto_image,
            "units_of_target_count": len(rep.units_of_target),
            "units_of_image_count": len(rep.units_of_image),
            "image_size": rep.image_size,
            "kill_check": idempotent_kill_check(hom),
        }
    return finalize_report(payload)


def _violations(kind: str, n: int, add, mul, one) -> list:
    """Scan every axiom of the declared kind, least witness each."""
    out = []

    def hit(axiom, witness, message):
        out.append(
            {
                "axiom": axiom,
                "witness": None if witness is None else list(witness),
                "message": message,
            }
        )

    add = np.asarray(add, dtype=np.int64)
    if not tables.entries_in_range(add, n):
        hit("entries-in-range", None, "add entries outside 0..n-1")
        return out
    w = tables.latin_witness(add)
    if w is not None:
        axis, i, v = w
        hit("latin-square", (i, v), f"duplicate {v} in add {axis} {i}")
    idx = np.arange(n)
    if not (np.array_equal(add[0], idx) and np.array_equal(add[:, 0], idx)):
        bad = np.where((add[0] != idx) | (add[:, 0] != idx))[0]
        hit("two-sided-zero", (int(bad[0]),), "0 is not a two-sided zero")
    if kind == "loop":
        return out

    mul = np.asarray(mul, dtype=np.int64)
    if not tables.entries_in_range(mul, n):
        hit("entries-in-range", None, "mul entries outside 0..n-1")
        return out
    if not 0 <= one < n:
        hit("mul-identity", (one,), f"identity index {one} outside the carrier")
        return out
    w = tables.identity_witness(mul, one)
    if w is not None:
        hit("mul-identity", (w,), f"{one} is not a two-sided multiplicative identity")
    w = tables.assoc_witness(mul)
    if w is not None:
        hit("mul-associative", w, "multiplication is not associative")
    w = tables.right_dist_witness(add, mul)
    if w is not None:
        hit("right-distributivity", w, "(a+b)*c != a*c + b*c")
    bad = np.where(mul[0] != 0)[0]
    if bad.size:
        hit("zero-left-absorbing", (int(bad[0]),), "0*n != 0")
    if kind == "lnr":
        return out

    w = tables.comm_witness(add)
    if w is not None:
        hit("abelian-addition", w, "addition is not commutative")
    w = tables.assoc_witness(add)
    if w is not None:
        hit("abelian-addition", w, "addition is not associative")
    w = tables.left_dist_witness(add, mul)
    if w is not None:
        hit("left-distributivity", w, "c*(a+b) != c*a + c*b")
    return out


def check_report(kind: str, n: int, add, mul, one, name: str) -> dict:
    violations = _violations(kind, n, add, mul, one)
    payload = {
        "command": "check",
        "input": name,
        "kind": kind,
        "n": n,
        "valid": not violations,
        "violations": violations,
    }
    return finalize_report(payload)


def _scalar_text(value) -> str:
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def render_text(payload: dict, indent: int = 0) -> str:
    """Human-readable rendering of a report dict, deterministic order."""
    lines = []
    pad = "  " * indent
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for i, item in enumerate(value):
                lines.append(f"{pad}  [{i}]")
                lines.append(render_text(item, indent + 2))
        else:
            lines.append(f"{pad}{key}: {_scalar_text(value)}")
    return "\n".join(lines)

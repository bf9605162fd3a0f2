"""Constructors for the bundled corpus of loops, near-rings and rings.

Indexing conventions (documented here so golden files are portable):

  * cyclic:n          carrier 0..n-1, the usual mod-n tables.
  * gf:q              polynomial coefficient vectors over F_p in
                      little-endian digit order, element index
                      c0 + c1*p + c2*p^2 + ...
  * matrix:base,k     k x k matrices, flattened row-major, entry
                      digits in mixed radix |base| with the FIRST
                      entry most significant: index of (m00, m01, ...,
                      m(k-1)(k-1)) is sum m_ij * B^(k*k-1-pos).
  * ut2:base          upper triangular 2x2 matrices (a, b, d) over the
                      base ring, index a*B^2 + b*B + d.
  * m:loop / m0:loop  all self-maps (resp. zero-fixing self-maps) of a
                      loop under pointwise + and composition
                      (f*g)(x) = f(g(x)); a map is indexed by its value
                      tuple (f(0), f(1), ...) read as mixed-radix
                      digits, f(0) most significant.  For m0 the f(0)
                      digit is omitted (it is always 0).
  * product:a+b+...   componentwise tables, index of (x1, .., xk) in
                      mixed radix with the first factor most
                      significant.
  * smallloop:n,i     the i-th reduced Latin square of order n in
                      lexicographic order of the flattened table.
  * nonassoc5         the lexicographically least order-5 loop table
                      that is not associative.
  * random_loop:n,s   seeded random Latin square completion, rows and
                      columns through 0 fixed to the identity.
"""

from __future__ import annotations

import functools
import random

import numpy as np

from . import tables
from .config import DEFAULT_BOUNDS, Bounds
from .errors import BoundExceeded, ParseError
from .loops import CayleyLoop, is_associative, validate_loop
from .nearrings import LoopNearRing, validate_lnr
from .rings import FiniteRing, validate_ring, validate_ring_tables


def cyclic_ring(n: int) -> FiniteRing:
    """Z/n.  The degenerate n = 1 zero ring is allowed."""
    if n < 1:
        raise ValueError("cyclic ring needs n >= 1")
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return validate_ring_tables(add, mul, 1 % n)


def _factor_prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m == 1:
                return p, k
            return None
    return None


def _poly_mul_mod(a, b, modpoly, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce by the monic modulus
    k = len(modpoly) - 1
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(k):
                out[i - k + j] = (out[i - k + j] - c * modpoly[j]) % p
    return out[:k] + [0] * (k - len(out[:k]))


def _find_irreducible(p: int, k: int):
    """Least monic irreducible of degree k over F_p, little-endian coeffs."""
    if k == 1:
        return [0, 1]
    lower = []
    for deg in range(1, k // 2 + 1):
        for c in range(p ** deg):
            digs = [(c // p ** i) % p for i in range(deg)] + [1]
            lower.append(digs)
    for c in range(p ** k):
        cand = [(c // p ** i) % p for i in range(k)] + [1]
        ok = True
        for d in lower:
            # trial division: check whether d divides cand
            rem = list(cand)
            dd = len(d) - 1
            for i in range(len(rem) - 1, dd - 1, -1):
                lead = rem[i]
                if lead:
                    for j in range(dd + 1):
                        rem[i - dd + j] = (rem[i - dd + j] - lead * d[j]) % p
            if not any(rem[:dd]):
                ok = False
                break
        if ok:
            return cand
    raise RuntimeError("no irreducible polynomial found")  # unreachable


def galois_field(q: int) -> FiniteRing:
    """The field with q = p^k elements."""
    fac = _factor_prime_power(q)
    if fac is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = fac
    if k == 1:
        return cyclic_ring(p)
    modpoly = _find_irreducible(p, k)
    polys = [[(x // p ** i) % p for i in range(k)] for x in range(q)]

    def enc(poly):
        return sum(c * p ** i for i, c in enumerate(poly))

    add = [[enc([(a + b) % p for a, b in zip(polys[x], polys[y])]) for y in range(q)]
           for x in range(q)]
    mul = [[enc(_poly_mul_mod(polys[x], polys[y], modpoly, p)) for y in range(q)]
           for x in range(q)]
    return validate_ring_tables(add, mul, 1)


def matrix_ring(base: FiniteRing, k: int, bounds: Bounds = DEFAULT_BOUNDS) -> FiniteRing:
    """k x k matrices over a finite base ring."""
    if k < 1:
        raise ValueError("matrix ring needs k >= 1")
    b = base.n
    size = b ** (k * k)
    if size > bounds.max_matrix_size:
        raise BoundExceeded(
            f"matrix ring would have {size} elements, cap is {bounds.max_matrix_size}"
        )
    radices = [b] * (k * k)
    digits = tables.decode_all(size, radices)          # (size, k*k)
    badd, bmul = base.add, base.mul
    add_rows = np.empty((size, size), dtype=np.int64)
    mul_rows = np.empty((size, size), dtype=np.int64)
    mats = digits.reshape(size, k, k)
    for i in range(size):
        add_rows[i] = tables.encode(badd[digits[i][None, :], digits], radices)
        acc = np.zeros((size, k, k), dtype=tables.DTYPE)
        a = mats[i]
        for r in range(k):
            for c in range(k):
                s = np.zeros(size, dtype=tables.DTYPE)
                for t in range(k):
                    s = badd[s, bmul[a[r, t], mats[:, t, c]]]
                acc[:, r, c] = s
        mul_rows[i] = tables.encode(acc.reshape(size, k * k), radices)
    eye = np.zeros((k, k), dtype=np.int64)
    eye[np.arange(k), np.arange(k)] = base.one
    one = int(tables.encode(eye.reshape(1, k * k), radices)[0])
    return validate_ring_tables(add_rows, mul_rows, one)


def upper_triangular_ring(base: FiniteRing, bounds: Bounds = DEFAULT_BOUNDS) -> FiniteRing:
    """Upper triangular 2x2 matrices (a, b, d) over the base ring."""
    b = base.n
    size = b ** 3
    if size > bounds.max_n:
        raise BoundExceeded(f"triangular ring would have {size} elements, cap is {bounds.max_n}")
    radices = [b] * 3
    digits = tables.decode_all(size, radices)          # columns: a, b, d
    badd, bmul = base.add, base.mul
    add_rows = np.empty((size, size), dtype=np.int64)
    mul_rows = np.empty((size, size), dtype=np.int64)
    for i in range(size):
        ai, bi, di = (int(x) for x in digits[i])
        add_rows[i] = tables.encode(badd[digits[i][None, :], digits], radices)
        # (a,b,d)*(a',b',d') = (a a', a b' + b d', d d')
        prod = np.stack(
            [
                bmul[ai, digits[:, 0]],
                badd[bmul[ai, digits[:, 1]], bmul[bi, digits[:, 2]]],
                bmul[di, digits[:, 2]],
            ],
            axis=1,
        )
        mul_rows[i] = tables.encode(prod, radices)
    one = int(tables.encode(np.array([[base.one, 0, base.one]], dtype=np.int64), radices)[0])
    return validate_ring_tables(add_rows, mul_rows, one)


def map_near_ring(loop: CayleyLoop, zero_fixing: bool, bounds: Bounds = DEFAULT_BOUNDS) -> LoopNearRing:
    """M(G) or M0(G): self-maps of a loop under pointwise + and composition.

    Composition is (f*g)(x) = f(g(x)); right distributivity over
    pointwise addition holds by construction, and the validator
    certifies it anyway.
    """
    n = loop.n
    size = n ** (n - 1) if zero_fixing else n ** n
    if size > bounds.max_map_size:
        raise BoundExceeded(
            f"map near-ring would have {size} elements, cap is {bounds.max_map_size}"
        )
    if zero_fixing:
        free = tables.decode_all(size, [n] * (n - 1)) if n > 1 else np.zeros((1, 0), tables.DTYPE)
        maps = np.concatenate([np.zeros((size, 1), dtype=tables.DTYPE), free], axis=1)
        radices = [n] * (n - 1)

        def enc(vals):
            if n == 1:
                return np.zeros(len(vals), dtype=np.int64)
            return tables.encode(vals[:, 1:], radices)
    else:
        maps = tables.decode_all(size, [n] * n)
        radices = [n] * n

        def enc(vals):
            return tables.encode(vals, radices)

    add_rows = np.empty((size, size), dtype=np.int64)
    mul_rows = np.empty((size, size), dtype=np.int64)
    ladd = loop.add
    for i in range(size):
        add_rows[i] = enc(ladd[maps[i][None, :], maps])   # pointwise f(x) + g(x)
        mul_rows[i] = enc(maps[i][maps])                  # composition f(g(x))
    ident = np.arange(n, dtype=tables.DTYPE)
    one = int(enc(ident[None, :])[0])
    return validate_lnr(add_rows, mul_rows, one)


def _reduced_latin_squares(n: int, rng: random.Random | None = None):
    """Yield reduced n x n Latin squares (row 0 and column 0 identity).

    Cells are filled row-major with ascending candidate values, so
    squares appear in lexicographic order of the flattened table; with
    ``rng`` the candidate order is shuffled instead.
    """
    grid = [[0] * n for _ in range(n)]
    grid[0] = list(range(n))
    for r in range(1, n):
        grid[r][0] = r
    row_used = [1 << r for r in range(n)]
    row_used[0] = (1 << n) - 1
    # column 0 is fully used; column c >= 1 so far holds only grid[0][c] = c
    col_used = [(1 << n) - 1] + [(1 << c) for c in range(1, n)]

    cells = [(r, c) for r in range(1, n) for c in range(1, n)]

    def fill(k):
        if k == len(cells):
            yield [row[:] for row in grid]
            return
        r, c = cells[k]
        avail = ~(row_used[r] | col_used[c]) & ((1 << n) - 1)
        vals = [v for v in range(n) if avail >> v & 1]
        if rng is not None:
            rng.shuffle(vals)
        for v in vals:
            bit = 1 << v
            grid[r][c] = v
            row_used[r] |= bit
            col_used[c] |= bit
            yield from fill(k + 1)
            row_used[r] &= ~bit
            col_used[c] &= ~bit

    yield from fill(0)


@functools.cache
def all_loops(n: int) -> tuple:
    """All reduced Latin squares of order n <= 5, as validated loops."""
    if not 1 <= n <= 5:
        raise BoundExceeded("full loop enumeration is supported for n <= 5 only")
    return tuple(validate_loop(g) for g in _reduced_latin_squares(n))


@functools.cache
def smallest_nonassociative_loop() -> CayleyLoop:
    """Lexicographically least order-5 loop table failing associativity.

    Orders up to 4 admit only associative loops, so 5 is the least
    order where this exists; found by exhaustive search in table order.
    """
    for grid in _reduced_latin_squares(5):
        loop = validate_loop(grid)
        if not is_associative(loop):
            return loop
    raise RuntimeError("no nonassociative loop of order 5 found")  # unreachable


def random_loop(n: int, seed: int) -> CayleyLoop:
    """Uniform-ish random reduced Latin square by seeded backtracking."""
    if not 1 <= n <= 12:
        raise BoundExceeded("random_loop supports 1 <= n <= 12")
    rng = random.Random(seed)
    for grid in _reduced_latin_squares(n, rng=rng):
        return validate_loop(grid)
    raise RuntimeError("backtracking found no Latin square")  # unreachable


def product(structures, bounds: Bounds = DEFAULT_BOUNDS):
    """Componentwise product; all factors must be the same kind.

    Loops produce a loop, near-rings a near-ring, rings a ring.  The
    index of a tuple is mixed-radix with the first factor most
    significant.
    """
    structures = list(structures)
    if not structures:
        raise ValueError("product needs at least one factor")
    kinds = set()
    for s in structures:
        if isinstance(s, FiniteRing):
            kinds.add("ring")
        elif isinstance(s, LoopNearRing):
            kinds.add("lnr")
        elif isinstance(s, CayleyLoop):
            kinds.add("loop")
        else:
            raise TypeError(f"cannot take products of {type(s).__name__}")
    if "loop" in kinds and len(kinds) > 1:
        raise TypeError("cannot mix loops with near-rings in a product")
    size = 1
    for s in structures:
        size *= s.n
    if size > bounds.max_n:
        raise BoundExceeded(f"product would have {size} elements, cap is {bounds.max_n}")
    radices = [s.n for s in structures]
    digits = tables.decode_all(size, radices)
    loops = [s if isinstance(s, CayleyLoop) else s.additive for s in structures]

    def combine(op_tables):
        rows = np.empty((size, size), dtype=np.int64)
        cols = np.empty((size, len(structures)), dtype=tables.DTYPE)
        for i in range(size):
            for t, op in enumerate(op_tables):
                cols[:, t] = op[digits[i, t], digits[:, t]]
            rows[i] = tables.encode(cols, radices)
        return rows

    add = combine([l.add for l in loops])
    if kinds == {"loop"}:
        return validate_loop(add)
    mul = combine([s.mul for s in structures])
    one = int(tables.encode(
        np.array([[s.one for s in structures]], dtype=np.int64), radices)[0])
    nr = validate_lnr(add, mul, one)
    if kinds == {"ring"}:
        return validate_ring(nr)
    return nr


def opposite(nr: LoopNearRing):
    """Same addition, reversed multiplication.

    The result must itself satisfy right distributivity to be a loop
    near-ring in the convention used here; when it does not, the
    validator raises RightDistributivityFails with a witness.
    """
    mul_op = np.ascontiguousarray(nr.mul.T)
    out = validate_lnr(nr.additive, mul_op, nr.one)
    if isinstance(nr, FiniteRing):
        return validate_ring(out)
    return out


def parse_spec(spec: str, bounds: Bounds = DEFAULT_BOUNDS):
    """Build a structure from a corpus spec string.

    Grammar (see the module docstring for indexing conventions):

        cyclic:N | gf:Q | matrix:BASE,K | ut2:BASE | m:SPEC | m0:SPEC |
        product:SPEC+SPEC+... | opposite:SPEC | smallloop:N,I |
        random_loop:N,SEED | nonassoc5

    Nested specs are allowed everywhere except inside product factors,
    which may not themselves contain "+".
    """
    spec = spec.strip()
    if spec == "nonassoc5":
        return smallest_nonassociative_loop()
    head, sep, rest = spec.partition(":")
    if not sep or not rest:
        raise ParseError(f"bad spec {spec!r}")

    def as_int(tok, what):
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"bad {what} {tok!r} in spec {spec!r}") from None

    def as_ring(sub):
        inner = parse_spec(sub, bounds)
        if not isinstance(inner, FiniteRing):
            raise ParseError(f"{head} wants a ring, got {sub!r}")
        return inner

    if head == "cyclic":
        n = as_int(rest, "order")
        if n < 1:
            raise ParseError("cyclic wants n >= 1")
        if n > bounds.max_n:
            raise BoundExceeded(f"order {n} exceeds max_n={bounds.max_n}")
        return cyclic_ring(n)
    if head == "gf":
        q = as_int(rest, "order")
        if q > bounds.max_n:
            raise BoundExceeded(f"order {q} exceeds max_n={bounds.max_n}")
        try:
            return galois_field(q)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if head == "matrix":
        base_spec, _, k_tok = rest.rpartition(",")
        if not base_spec:
            raise ParseError(f"matrix wants base,k, got {rest!r}")
        return matrix_ring(as_ring(base_spec), as_int(k_tok, "matrix size"), bounds)
    if head == "ut2":
        return upper_triangular_ring(as_ring(rest), bounds)
    if head in ("m", "m0"):
        inner = parse_spec(rest, bounds)
        loop = inner if isinstance(inner, CayleyLoop) else inner.additive
        return map_near_ring(loop, zero_fixing=(head == "m0"), bounds=bounds)
    if head == "product":
        parts = rest.split("+")
        if len(parts) < 2:
            raise ParseError("product wants at least two factors")
        factors = [parse_spec(p, bounds) for p in parts]
        try:
            return product(factors, bounds)
        except TypeError as exc:
            raise ParseError(str(exc)) from None
    if head == "opposite":
        inner = parse_spec(rest, bounds)
        if not isinstance(inner, LoopNearRing):
            raise ParseError("opposite wants a near-ring or ring")
        return opposite(inner)
    if head == "smallloop":
        n_tok, _, i_tok = rest.partition(",")
        n, i = as_int(n_tok, "order"), as_int(i_tok, "index")
        loops = all_loops(n)
        if not 0 <= i < len(loops):
            raise ParseError(f"smallloop index {i} out of range, order {n} has {len(loops)}")
        return loops[i]
    if head == "random_loop":
        n_tok, _, s_tok = rest.partition(",")
        return random_loop(as_int(n_tok, "order"), as_int(s_tok, "seed"))
    raise ParseError(f"unknown spec head {head!r}")


# The bundled corpus: spec strings with their kinds and sizes, so that
# listing the catalog needs no construction work.  Tests rebuild every
# entry and assert the recorded kind and size.
CATALOG = (
    ("cyclic:1", "ring", 1),
    ("cyclic:2", "ring", 2),
    ("cyclic:3", "ring", 3),
    ("cyclic:4", "ring", 4),
    ("cyclic:5", "ring", 5),
    ("cyclic:6", "ring", 6),
    ("cyclic:7", "ring", 7),
    ("cyclic:8", "ring", 8),
    ("cyclic:9", "ring", 9),
    ("cyclic:10", "ring", 10),
    ("cyclic:11", "ring", 11),
    ("cyclic:12", "ring", 12),
    ("cyclic:13", "ring", 13),
    ("cyclic:14", "ring", 14),
    ("cyclic:15", "ring", 15),
    ("cyclic:16", "ring", 16),
    ("gf:4", "ring", 4),
    ("product:cyclic:2+cyclic:2", "ring", 4),
    ("product:cyclic:2+cyclic:3", "ring", 6),
    ("product:cyclic:4+cyclic:2", "ring", 8),
    ("matrix:cyclic:2,2", "ring", 16),
    ("matrix:cyclic:3,2", "ring", 81),
    ("matrix:cyclic:4,2", "ring", 256),
    ("ut2:cyclic:2", "ring", 8),
    ("ut2:cyclic:3", "ring", 27),
    ("opposite:matrix:cyclic:2,2", "ring", 16),
    ("m:cyclic:2", "lnr", 4),
    ("m0:cyclic:2", "lnr", 2),
    ("m0:cyclic:3", "lnr", 9),
    ("m0:cyclic:4", "lnr", 64),
    ("m0:smallloop:4,0", "lnr", 64),
    ("m0:smallloop:4,1", "lnr", 64),
    ("m0:smallloop:4,2", "lnr", 64),
    ("m0:smallloop:4,3", "lnr", 64),
    ("m0:nonassoc5", "lnr", 625),
    ("nonassoc5", "loop", 5),
    ("smallloop:5,0", "loop", 5),
    ("random_loop:6,0", "loop", 6),
    ("random_loop:8,1", "loop", 8),
)

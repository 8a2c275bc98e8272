"""Meet-in-the-middle solver for x^4 + w^2 = y z^3 - y^3 z over GF(3)[t].

A level-d run tabulates every admissible right-hand side rhs(y, z) with
deg y, deg z <= d in a sorted array keyed by the packed polynomial value,
then streams admissible left-hand sides lhs(x, w) against it in blocks.
Admissibility comes from the constant/leading coefficient arguments:

  * rhs always has zero constant term, and its t^(4d) coefficient vanishes
    for every deg <= d pair, so matching x, w must have zero constant term,
    deg x <= d-1 and deg w <= 2d-1;
  * a left side with zero constant term automatically has zero linear term,
    so table entries with a nonzero linear coefficient can never match and
    may be purged.

Two symmetry folds shrink the work 16-fold without changing the emitted
solution set: (y, z) -> (z, -y) generates an order-4 rotation fixing rhs,
and lhs is invariant under x -> -x and w -> -w.  Folded runs store or query
one representative per orbit and expand all members on reconstruction;
tests check folded and unfolded runs emit identical sets.

Heavy lifting is vectorised with numpy on 64-bit packed words (the final
rhs/lhs values at d <= 8 have degree <= 31 and fit one word).
"""

from __future__ import annotations

import os
import struct
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import gf, poly

_U = np.uint64
_LO64 = _U(0x5555555555555555)
_ONE = _U(1)
_TWO = _U(2)

_RHS_MAGIC = b"DP2RHS1"


class SearchError(Exception):
    pass


class MemoryBudgetExceeded(SearchError):
    def __init__(self, estimate: int, budget: int):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"estimated table footprint ~{estimate / 1e9:.2f} GB exceeds "
            f"memory budget {budget / 1e9:.2f} GB"
        )


class WorkerFailure(SearchError):
    def __init__(self, done_blocks: int, total_blocks: int, cause: BaseException):
        self.done_blocks = done_blocks
        self.total_blocks = total_blocks
        super().__init__(
            f"matching aborted after {done_blocks}/{total_blocks} blocks: {cause!r}"
        )


class MalformedLine(SearchError):
    def __init__(self, lineno: int, reason: str):
        self.lineno = lineno
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}")


# ---------------------------------------------------------------------------
# solution quadruples


@dataclass(frozen=True, order=False)
class Param:
    """Solution quadruple of packed polynomials at search level d."""

    x: int
    y: int
    z: int
    w: int
    d: int

    def indices(self) -> tuple:
        return (poly.to_index(self.x), poly.to_index(self.y),
                poly.to_index(self.z), poly.to_index(self.w))

    def verify(self) -> bool:
        return poly.verify_param(self.x, self.y, self.z, self.w)

    def level_exact(self) -> bool:
        return (poly.degree(self.y) == self.d or poly.degree(self.z) == self.d
                or poly.degree(self.w) == 2 * self.d - 1)

    def scalar_normalized(self) -> "Param":
        """Representative of {(x,y,z,w), (2x,2y,2z,w)}: first nonzero
        coefficient in the concatenated x, y, z stream equals 1."""
        for p in (self.x, self.y, self.z):
            i = 0
            while p >> (2 * i):
                c = (p >> (2 * i)) & 3
                if c == 1:
                    return self
                if c == 2:
                    return Param(poly.neg(self.x), poly.neg(self.y),
                                 poly.neg(self.z), self.w, self.d)
                i += 1
        raise ValueError("cannot normalize: x = y = z = 0")

    def swapped(self) -> "Param":
        """The companion solution (x, z, -y, w)."""
        return Param(self.x, self.z, poly.neg(self.y), self.w, self.d)

    def w_negated(self) -> "Param":
        return Param(self.x, self.y, self.z, poly.neg(self.w), self.d)

    def scalar_twin(self) -> "Param":
        return Param(poly.neg(self.x), poly.neg(self.y), poly.neg(self.z),
                     self.w, self.d)

    def text(self) -> str:
        return (f"d={self.d}; x={poly.format_poly(self.x)}; "
                f"y={poly.format_poly(self.y)}; z={poly.format_poly(self.z)}; "
                f"w={poly.format_poly(self.w)}")

    @classmethod
    def parse(cls, line: str) -> "Param":
        parts = [p.strip() for p in line.strip().split(";") if p.strip()]
        fields = {}
        for part in parts:
            if "=" not in part:
                raise ValueError(f"bad field {part!r}")
            k, v = part.split("=", 1)
            fields[k.strip()] = v.strip()
        try:
            d = int(fields["d"])
            vals = {k: poly.parse_poly(fields[k]) for k in ("x", "y", "z", "w")}
        except KeyError as e:
            raise ValueError(f"missing field {e.args[0]!r}") from None
        if d < 1:
            raise ValueError(f"bad level {d}")
        return cls(vals["x"], vals["y"], vals["z"], vals["w"], d)

    def sort_key(self):
        return (self.d,) + self.indices()


@dataclass(frozen=True)
class SolutionSet:
    """Raw match output in canonical order plus counters."""

    params: tuple
    raw_count: int
    degenerate_count: int | None = None


@dataclass(frozen=True)
class SearchConfig:
    degree: int
    threads: int = 0                # 0 -> os.cpu_count()
    block_size: int = 1 << 22
    memory_budget: int | None = None
    fold: bool = True
    purge_linear: bool = True
    cache_rhs: str | None = None

    def resolved_threads(self) -> int:
        return self.threads if self.threads > 0 else (os.cpu_count() or 1)


@dataclass(frozen=True)
class LevelResult:
    level: int
    raw_count: int
    exact_count: int
    constant_count: int
    reducible_count: int
    kept: int
    normalized: tuple       # level-exact nondegenerate, scalar-normalized
    table_entries: int
    query_count: int
    seconds: float


# ---------------------------------------------------------------------------
# packed-word numpy kernels


def _vadd(a, b):
    al = a & _LO64
    ah = (a >> _ONE) & _LO64
    bl = b & _LO64
    bh = (b >> _ONE) & _LO64
    t = (al | bh) ^ (ah | bl)
    return ((ah | bh) ^ t) | (((al | bl) ^ t) << _ONE)


def _vneg(a):
    return ((a & _LO64) << _ONE) | ((a >> _ONE) & _LO64)


def _vpack(idx, ncoef):
    """Packed words from base-3 digit expansions of index array."""
    out = np.zeros(idx.shape, dtype=np.uint64)
    for j in range(ncoef):
        out |= ((idx // _U(3**j)) % _U(3)) << _U(2 * j)
    return out


def _vcube(idx, ncoef):
    out = np.zeros(idx.shape, dtype=np.uint64)
    for j in range(ncoef):
        out |= ((idx // _U(3**j)) % _U(3)) << _U(6 * j)
    return out


def _vneg_index(idx, ncoef):
    out = np.zeros(idx.shape, dtype=np.uint64)
    for j in range(ncoef):
        out += ((_U(3) - (idx // _U(3**j)) % _U(3)) % _U(3)) * _U(3**j)
    return out


def _vmul_indexed(idx, ncoef, other):
    """Polynomial product digits(idx) * other, element-wise over arrays."""
    acc = np.zeros(np.broadcast(idx, other).shape, dtype=np.uint64)
    for j in range(ncoef):
        dj = (idx // _U(3**j)) % _U(3)
        term = other << _U(2 * j)
        acc = _vadd(acc, np.where(dj == 1, term, np.where(dj == 2, _vneg(term), _U(0))))
    return acc


def _neg_index_scalar(n: int) -> int:
    out, k = 0, 0
    while n:
        n, r = divmod(n, 3)
        out += ((3 - r) % 3) * 3**k
        k += 1
    return out


# ---------------------------------------------------------------------------
# right-hand-side table


def _rhs_pair_count(d: int, fold: bool) -> int:
    n = 3 ** (d + 1)
    return (n * n - 1) // 4 + 1 if fold else n * n


def estimate_rhs_bytes(d: int, fold: bool = True, purge_linear: bool = True) -> int:
    """Rough upper bound on peak memory for building the level-d table."""
    entries = _rhs_pair_count(d, fold)
    if purge_linear:
        entries = int(entries * 0.45)  # ~1/3 survive; leave headroom
    return entries * (8 + 4 + 8) + 64 * 1024 * 1024


@dataclass
class RhsTable:
    """Sorted (rhs value, y index, z index) entries for one level."""

    d: int
    values: np.ndarray          # uint64, ascending
    pos: np.ndarray             # uint32, iy * 3^(d+1) + iz
    folded: bool
    purged: bool

    def __len__(self) -> int:
        return len(self.values)

    @property
    def n(self) -> int:
        return 3 ** (self.d + 1)

    def entry_pairs(self, k: int) -> list:
        """(iy, iz) pairs of entry k, expanded through the rotation fold."""
        p = int(self.pos[k])
        iy, iz = divmod(p, self.n)
        if not self.folded:
            return [(iy, iz)]
        ny, nz = _neg_index_scalar(iy), _neg_index_scalar(iz)
        out = {(iy, iz), (iz, ny), (ny, nz), (nz, iy)}
        return sorted(out)

    def lookup(self, value: int) -> list:
        """All (iy, iz) pairs whose rhs equals the packed value."""
        v = _U(value)
        lo = int(np.searchsorted(self.values, v, side="left"))
        hi = int(np.searchsorted(self.values, v, side="right"))
        out = []
        for k in range(lo, hi):
            out.extend(self.entry_pairs(k))
        return sorted(set(out))

    def save(self, path: str) -> None:
        flags = (1 if self.folded else 0) | (2 if self.purged else 0)
        with open(path, "wb") as f:
            f.write(_RHS_MAGIC)
            f.write(struct.pack("<BBQ", self.d, flags, len(self.values)))
            f.write(self.values.astype("<u8").tobytes())
            f.write(self.pos.astype("<u4").tobytes())

    @classmethod
    def load(cls, path: str) -> "RhsTable":
        with open(path, "rb") as f:
            magic = f.read(len(_RHS_MAGIC))
            if magic != _RHS_MAGIC:
                raise SearchError(f"{path}: bad magic {magic!r}")
            d, flags, count = struct.unpack("<BBQ", f.read(10))
            values = np.frombuffer(f.read(8 * count), dtype="<u8").astype(np.uint64)
            pos = np.frombuffer(f.read(4 * count), dtype="<u4").astype(np.uint32)
        if len(values) != count or len(pos) != count:
            raise SearchError(f"{path}: truncated table")
        return cls(d=d, values=values, pos=pos,
                   folded=bool(flags & 1), purged=bool(flags & 2))


def gen_rhs_table(d: int, *, fold: bool = False, purge_linear: bool = False,
                  memory_budget: int | None = None,
                  progress=None) -> RhsTable:
    """Tabulate rhs(y, z) over all deg <= d pairs, sorted by value.

    With purge_linear, entries whose linear coefficient is nonzero are
    dropped (no admissible left side can match them).  With fold, one
    representative per (y, z) -> (z, -y) orbit is stored.
    """
    if not 1 <= d <= 8:
        raise ValueError("level must be in 1..8")
    if memory_budget is not None:
        est = estimate_rhs_bytes(d, fold, purge_linear)
        if est > memory_budget:
            raise MemoryBudgetExceeded(est, memory_budget)
    n = 3 ** (d + 1)
    ncoef = d + 1
    all_idx = np.arange(n, dtype=np.uint64)
    cube_tab = _vcube(all_idx, ncoef)
    neg_tab = _vneg_index(all_idx, ncoef)
    val_chunks, pos_chunks = [], []
    rows_per_chunk = max(1, (1 << 22) // n)
    for y0 in range(0, n, rows_per_chunk):
        rows = np.arange(y0, min(y0 + rows_per_chunk, n), dtype=np.uint64)
        iy = np.repeat(rows, n)
        iz = np.tile(all_idx, len(rows))
        if fold:
            ny, nz = neg_tab[iy], neg_tab[iz]
            k0 = iy * _U(n) + iz
            keep = ((k0 <= iz * _U(n) + ny) & (k0 <= ny * _U(n) + nz)
                    & (k0 <= nz * _U(n) + iy))
            iy, iz = iy[keep], iz[keep]
        vals = _vadd(_vmul_indexed(iy, ncoef, cube_tab[iz]),
                     _vneg(_vmul_indexed(iz, ncoef, cube_tab[iy])))
        if purge_linear:
            keep = (vals >> _TWO) & _U(3) == 0
            iy, iz, vals = iy[keep], iz[keep], vals[keep]
        val_chunks.append(vals)
        pos_chunks.append((iy * _U(n) + iz).astype(np.uint32))
        if progress:
            progress(min(y0 + rows_per_chunk, n), n)
    values = np.concatenate(val_chunks) if val_chunks else np.zeros(0, np.uint64)
    pos = np.concatenate(pos_chunks) if pos_chunks else np.zeros(0, np.uint32)
    del val_chunks, pos_chunks
    order = np.argsort(values, kind="stable")
    return RhsTable(d=d, values=values[order], pos=pos[order],
                    folded=fold, purged=purge_linear)


# ---------------------------------------------------------------------------
# left-hand-side stream


def x_candidates(d: int, fold: bool = False) -> list:
    """Indices of admissible x: deg <= d-1, zero constant term."""
    out = []
    for m in range(3 ** (d - 1)):
        ix = 3 * m
        if fold and ix > _neg_index_scalar(ix):
            continue
        out.append(ix)
    return out


def w_candidates(d: int, fold: bool = False) -> np.ndarray:
    """Indices of admissible w: deg <= 2d-1, zero constant term."""
    idx = np.arange(3 ** (2 * d - 1), dtype=np.uint64) * _U(3)
    if fold:
        idx = idx[idx <= _vneg_index(idx, 2 * d)]
    return idx


@dataclass(frozen=True)
class LhsBlock:
    """One streamed block: a single x paired with a slice of w candidates."""

    d: int
    x_index: int
    w_indices: np.ndarray
    values: np.ndarray
    folded: bool


def _w_squares_sorted(d: int, fold: bool):
    """(w indices, w^2 packed values), ordered by ascending value.

    Value-ordered streaming keeps the binary searches of the matcher
    cache-local: beyond deg x^4 the query order follows the w^2 order.
    """
    wi = w_candidates(d, fold)
    w2 = _vmul_indexed(wi, 2 * d, _vpack(wi, 2 * d))
    order = np.argsort(w2, kind="stable")
    return wi[order], w2[order]


def gen_lhs_blocks(d: int, block_size: int = 1 << 22, fold: bool = False):
    """Yield LhsBlocks partitioning the admissible (x, w) set."""
    if not 1 <= d <= 8:
        raise ValueError("level must be in 1..8")
    wi, w2 = _w_squares_sorted(d, fold)
    for ix in x_candidates(d, fold):
        px = poly.from_index(ix)
        x4 = _U(poly.mul(poly.cube(px), px))
        for lo in range(0, len(wi), block_size):
            sl = slice(lo, lo + block_size)
            yield LhsBlock(d=d, x_index=ix, w_indices=wi[sl],
                           values=_vadd(x4, w2[sl]), folded=fold)


# ---------------------------------------------------------------------------
# matching


def _expand_matches(table: RhsTable, block: LhsBlock) -> list:
    """Raw (ix, iy, iz, iw) quadruples for every block value in the table."""
    if len(table) == 0 or len(block.values) == 0:
        return []
    pos = np.searchsorted(table.values, block.values, side="left")
    inb = pos < len(table.values)
    hit = np.zeros(len(block.values), dtype=bool)
    hit[inb] = table.values[pos[inb]] == block.values[inb]
    out = []
    for i in np.flatnonzero(hit):
        v = block.values[i]
        iw = int(block.w_indices[i])
        ix = block.x_index
        if block.folded:
            xs = {ix, _neg_index_scalar(ix)}
            ws = {iw, _neg_index_scalar(iw)}
        else:
            xs, ws = {ix}, {iw}
        k = int(pos[i])
        while k < len(table.values) and table.values[k] == v:
            for iy, iz in table.entry_pairs(k):
                for ex in xs:
                    for ew in ws:
                        out.append((ex, iy, iz, ew))
            k += 1
    return out


def match(table: RhsTable, blocks, threads: int = 1) -> SolutionSet:
    """Intersect streamed lhs blocks with the rhs table.

    The result is canonically sorted, so it does not depend on the thread
    count or the block partition.  Every emitted Param is re-verified.
    """
    blocks = list(blocks) if not isinstance(blocks, list) else blocks
    raw: set = set()
    lock = threading.Lock()
    done = 0

    def work(block):
        found = _expand_matches(table, block)
        with lock:
            raw.update(found)

    if threads <= 1:
        for b in blocks:
            work(b)
            done += 1
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(work, b) for b in blocks]
            for fut in futures:
                try:
                    fut.result()
                except Exception as e:
                    raise WorkerFailure(done, len(blocks), e) from e
                done += 1
    d = blocks[0].d if blocks else table.d
    params = []
    for ix, iy, iz, iw in sorted(raw):
        p = Param(poly.from_index(ix), poly.from_index(iy),
                  poly.from_index(iz), poly.from_index(iw), d)
        if not p.verify():
            raise SearchError(f"internal: reconstructed non-solution {p.text()}")
        params.append(p)
    return SolutionSet(params=tuple(params), raw_count=len(params))


# ---------------------------------------------------------------------------
# degeneracy classification

KEEP = "keep"
CONSTANT_MAP = "constant_map"
REDUCIBLE = "reducible"

_SQUARE81 = np.zeros(81, dtype=bool)
for _a in range(81):
    _SQUARE81[int(gf.MUL_TABLE[_a, _a])] = True


def _eval_batch(coeff_mat: np.ndarray) -> np.ndarray:
    """Evaluate GF(3) coefficient rows at every element of GF(81).

    coeff_mat: (n, L) uint8 with entries 0..2.  Returns (n, 81) uint8.
    """
    pts = np.arange(81, dtype=np.uint8)
    val = np.zeros((coeff_mat.shape[0], 81), dtype=np.uint8)
    for j in range(coeff_mat.shape[1] - 1, -1, -1):
        val = gf.ADD_TABLE[gf.MUL_TABLE[val, pts[None, :]], coeff_mat[:, j][:, None]]
    return val


def classify_params(params) -> list:
    """Degeneracy label for each Param: keep / constant_map / reducible.

    Constancy is decided by evaluating the weighted-projective image at the
    82 points of the projective line over GF(81); parameters where all four
    coordinates vanish are skipped.  Reducibility means some t - c with c in
    GF(3) divides x, y, z while (t - c)^2 divides w.
    """
    params = list(params)
    if not params:
        return []
    n = len(params)
    d = params[0].d
    lx, lw = d + 1, 2 * d + 1
    xs = np.array([poly.to_coeffs(p.x, lx) for p in params], dtype=np.uint8)
    ys = np.array([poly.to_coeffs(p.y, lx) for p in params], dtype=np.uint8)
    zs = np.array([poly.to_coeffs(p.z, lx) for p in params], dtype=np.uint8)
    ws = np.array([poly.to_coeffs(p.w, lw) for p in params], dtype=np.uint8)

    # values on GF(81) plus the point at infinity (top coefficients at the
    # level bounds: x and w are below their bounds, so 0 there)
    def with_inf(vals, top):
        return np.concatenate([vals, top[:, None]], axis=1)

    xv = with_inf(_eval_batch(xs), np.array([poly.coeff(p.x, d) for p in params], np.uint8))
    yv = with_inf(_eval_batch(ys), np.array([poly.coeff(p.y, d) for p in params], np.uint8))
    zv = with_inf(_eval_batch(zs), np.array([poly.coeff(p.z, d) for p in params], np.uint8))
    wv = with_inf(_eval_batch(ws), np.array([poly.coeff(p.w, 2 * d) for p in params], np.uint8))

    lam = np.where(xv != 0, gf.INV_TABLE[xv],
                   np.where(yv != 0, gf.INV_TABLE[yv],
                            np.where(zv != 0, gf.INV_TABLE[zv], 0)))
    xn = gf.MUL_TABLE[lam, xv].astype(np.int64)
    yn = gf.MUL_TABLE[lam, yv].astype(np.int64)
    zn = gf.MUL_TABLE[lam, zv].astype(np.int64)
    wn = gf.MUL_TABLE[gf.MUL_TABLE[lam, lam], wv].astype(np.int64)
    key = ((xn * 81 + yn) * 81 + zn) * 81 + wn
    xyz_zero = (xv == 0) & (yv == 0) & (zv == 0)
    # [0:0:0:w] identifies w up to squares
    key = np.where(xyz_zero & (wv != 0), 81**4 + (~_SQUARE81[wv]).astype(np.int64), key)
    valid = ~(xyz_zero & (wv == 0))
    big = np.int64(2) * 81**4
    kmin = np.where(valid, key, big).min(axis=1)
    kmax = np.where(valid, key, np.int64(-1)).max(axis=1)
    is_constant = (~valid.any(axis=1)) | (kmin == kmax)

    wder = [poly.derivative(p.w) for p in params]
    reducible = np.zeros(n, dtype=bool)
    for c in (0, 1, 2):
        red_c = np.array(
            [poly.eval_f3(p.x, c) == 0 and poly.eval_f3(p.y, c) == 0
             and poly.eval_f3(p.z, c) == 0 and poly.eval_f3(p.w, c) == 0
             and poly.eval_f3(dw, c) == 0
             for p, dw in zip(params, wder)], dtype=bool)
        reducible |= red_c

    zero_triple = np.array([p.x == 0 and p.y == 0 and p.z == 0 for p in params])
    labels = []
    for i in range(n):
        if zero_triple[i]:
            labels.append(CONSTANT_MAP)
        elif reducible[i]:
            labels.append(REDUCIBLE)
        elif is_constant[i]:
            labels.append(CONSTANT_MAP)
        else:
            labels.append(KEEP)
    return labels


def degeneracy_filter(p: Param) -> str:
    """Classify one solution: keep, constant_map, or reducible."""
    return classify_params([p])[0]


# ---------------------------------------------------------------------------
# level driver


def run_level(d: int, config: SearchConfig, progress=None) -> LevelResult:
    t0 = time.monotonic()
    table = None
    cache = config.cache_rhs
    if cache:
        path = cache if config.degree == d else f"{cache}.d{d}"
        if os.path.exists(path):
            table = RhsTable.load(path)
            if (table.d, table.folded, table.purged) != (d, config.fold, config.purge_linear):
                table = None
        if table is None:
            table = gen_rhs_table(d, fold=config.fold, purge_linear=config.purge_linear,
                                  memory_budget=config.memory_budget)
            table.save(path)
    else:
        table = gen_rhs_table(d, fold=config.fold, purge_linear=config.purge_linear,
                              memory_budget=config.memory_budget)
    blocks = list(gen_lhs_blocks(d, config.block_size, config.fold))
    query_count = sum(len(b.values) for b in blocks)
    sols = match(table, blocks, config.resolved_threads())
    labels = classify_params(sols.params)
    exact = [p.level_exact() for p in sols.params]
    kept = [p for p, lab, ex in zip(sols.params, labels, exact)
            if lab == KEEP and ex]
    normalized = sorted({p.scalar_normalized() for p in kept},
                        key=Param.sort_key)
    res = LevelResult(
        level=d,
        raw_count=sols.raw_count,
        exact_count=sum(exact),
        constant_count=labels.count(CONSTANT_MAP),
        reducible_count=labels.count(REDUCIBLE),
        kept=len(kept),
        normalized=tuple(normalized),
        table_entries=len(table),
        query_count=query_count,
        seconds=time.monotonic() - t0,
    )
    if progress:
        progress(res)
    return res


def run_search(config: SearchConfig, progress=None) -> list:
    """Run levels 1..degree cumulatively; each level reports only its
    level-exact solutions, so per-level counts partition the total."""
    if config.degree < 1 or config.degree > 8:
        raise ValueError("degree must be in 1..8")
    return [run_level(d, config, progress) for d in range(1, config.degree + 1)]


# ---------------------------------------------------------------------------
# solution file I/O


def write_solutions(path: str, results, config: SearchConfig) -> None:
    with open(path, "w") as f:
        f.write("# dp2 solution file v1\n")
        f.write(f"# degree={config.degree} levels=1-{config.degree} "
                f"fold={'on' if config.fold else 'off'} "
                f"purge_linear={'on' if config.purge_linear else 'off'}\n")
        for r in results:
            f.write(f"# level {r.level}: raw={r.raw_count} exact={r.exact_count} "
                    f"constant_map={r.constant_count} reducible={r.reducible_count} "
                    f"kept={r.kept} normalized={len(r.normalized)}\n")
        total = sum(len(r.normalized) for r in results)
        f.write(f"# total normalized={total}\n")
        for r in results:
            for p in r.normalized:
                f.write(p.text() + "\n")


def read_params(path: str) -> list:
    """Parse a solution file; raises MalformedLine with the line number."""
    out = []
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            try:
                out.append(Param.parse(s))
            except ValueError as e:
                raise MalformedLine(lineno, str(e)) from None
    return out

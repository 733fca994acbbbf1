"""Dense int64 acceleration for the hot series pipelines.

Coefficient polynomials in at most two variables are mirrored into small
dense numpy grids so that polynomial products become C-level integer
convolutions; bivariate grids are flattened to one dimension with a
collision-free stride (the Kronecker trick).  Exactness is never traded
away:

* an int64 convolution only runs when a rigorous bound certifies that
  every intermediate value fits (first the cheap bound
  nnz * max|a| * max|b|, then a float64 convolution of absolute values,
  both padded far beyond their own rounding slop);
* pairs or slots that cannot be certified are computed through signed
  base-2^20 limb decompositions, several certified int64 convolutions
  recombined on Python integers, so arbitrary magnitudes are exact;
* anything else (more than two variables, absurd sizes) raises
  :class:`NeedExact` and the caller reruns on the plain dict path.

The :class:`Slot` layer packages this: a polynomial that fits int64
travels as a grid, one that does not travels as a term dict, and mixed
arithmetic picks the certified route pair by pair.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .rings import Polynomial, RingDescriptor

# Certified values stay below 2**62.  The bounds compared against this
# are deliberate over-estimates padded by (1 + 1e-9), which dwarfs the
# float64 rounding slop of the estimates themselves, so the remaining
# 2x headroom to the int64 ceiling is genuine.
_LIMIT = float(2 ** 62)
_LIMIT_INT = 2 ** 62

_LIMB_BITS = 20
_LIMB_MASK = (1 << _LIMB_BITS) - 1
# limb products stay under 2**40; certification needs nnz below 2**22
_MAX_NNZ = 1 << 20


class NeedExact(Exception):
    """Raised when certified fast arithmetic is unavailable; callers
    rerun the whole operation on the exact dict representation."""


Exps = Tuple[int, ...]
Terms = Dict[Exps, int]


class Grid:
    """A polynomial in <= 2 variables as a dense int64 array plus offsets.

    ``offsets[i]`` is the exponent of variable i at array index 0
    (negative for Laurent polynomials).  Zero variables are stored as a
    one-cell array.  Every stored value is certified below 2**62.
    """

    __slots__ = ("offsets", "arr", "nnz", "amax")

    def __init__(self, offsets: Tuple[int, ...], arr: np.ndarray):
        self.offsets = offsets
        self.arr = arr
        self.nnz = int(np.count_nonzero(arr))
        self.amax = int(np.abs(arr).max()) if self.nnz else 0

    @property
    def is_zero(self) -> bool:
        return self.nnz == 0


def _zero_grid(nvars: int) -> Grid:
    return Grid((0,) * nvars, np.zeros((1,) * max(nvars, 1), dtype=np.int64))


def unit_grid(nvars: int) -> Grid:
    return Grid((0,) * nvars,
                np.array([1], dtype=np.int64).reshape((1,) * max(nvars, 1)))


def _bounding_box(exps: Sequence[Exps], nvars: int):
    mins = tuple(min(e[i] for e in exps) for i in range(nvars))
    maxs = tuple(max(e[i] for e in exps) for i in range(nvars))
    shape = tuple(maxs[i] - mins[i] + 1 for i in range(nvars))
    return mins, shape


def grid_from_terms(terms: Terms, nvars: int) -> Grid:
    """Build a grid; raises NeedExact on values beyond the certified range."""
    if nvars > 2:
        raise NeedExact("grids support at most two variables")
    if not terms:
        return _zero_grid(nvars)
    for c in terms.values():
        if c >= _LIMIT_INT or -c >= _LIMIT_INT:
            raise NeedExact("coefficient exceeds the certified int64 range")
    if nvars == 0:
        return Grid((), np.array([terms[()]], dtype=np.int64))
    mins, shape = _bounding_box(list(terms), nvars)
    arr = np.zeros(shape, dtype=np.int64)
    if nvars == 1:
        for (e0,), c in terms.items():
            arr[e0 - mins[0]] = c
    else:
        for (e0, e1), c in terms.items():
            arr[e0 - mins[0], e1 - mins[1]] = c
    return Grid(mins, arr)


def from_polynomial(p: Polynomial) -> Grid:
    return grid_from_terms(p._terms, p.ring.nvars)


def grid_terms(g: Grid, nvars: int) -> Terms:
    if nvars == 0:
        c = int(g.arr[0])
        return {(): c} if c else {}
    nz = np.nonzero(g.arr)
    values = g.arr[nz].tolist()
    if nvars == 1:
        keys = ((e,) for e in (nz[0] + g.offsets[0]).tolist())
    else:
        keys = zip((nz[0] + g.offsets[0]).tolist(),
                   (nz[1] + g.offsets[1]).tolist())
    return dict(zip(keys, values))


def to_polynomial(g: Grid, ring: RingDescriptor) -> Polynomial:
    return Polynomial._raw(ring, grid_terms(g, ring.nvars))


# -- certified convolution ----------------------------------------------

def _flatten(arr: np.ndarray, stride: int) -> np.ndarray:
    rows, cols = arr.shape
    flat = np.zeros(rows * stride, dtype=arr.dtype)
    flat.reshape(rows, stride)[:, :cols] = arr
    return flat[: (rows - 1) * stride + cols]


def _conv_arrays(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.ndim == 1:
        return np.convolve(a, b)
    stride = a.shape[1] + b.shape[1] - 1
    flat = np.convolve(_flatten(a, stride), _flatten(b, stride))
    rows = a.shape[0] + b.shape[0] - 1
    out = np.zeros(rows * stride, dtype=np.int64)
    out[: flat.shape[0]] = flat
    return out.reshape(rows, stride)


def _abs_bound_max(a: np.ndarray, b: np.ndarray) -> float:
    """Float64 upper bound on the largest sum of |products| in a*b."""
    fa = np.abs(a).astype(np.float64)
    fb = np.abs(b).astype(np.float64)
    if a.ndim == 1:
        worst = float(np.convolve(fa, fb).max())
    else:
        stride = a.shape[1] + b.shape[1] - 1
        ffa = np.zeros(fa.shape[0] * stride)
        ffa.reshape(fa.shape[0], stride)[:, : fa.shape[1]] = fa
        ffb = np.zeros(fb.shape[0] * stride)
        ffb.reshape(fb.shape[0], stride)[:, : fb.shape[1]] = fb
        worst = float(np.convolve(
            ffa[: (fa.shape[0] - 1) * stride + fa.shape[1]],
            ffb[: (fb.shape[0] - 1) * stride + fb.shape[1]],
        ).max())
    return worst * (1.0 + 1e-9) + 1.0


# -- limb route: exact products of any magnitude -------------------------

def _limb_split_array(arr: np.ndarray) -> List[np.ndarray]:
    """Signed base-2^20 limbs of an int64 array (small to large)."""
    neg = arr < 0
    mag = np.abs(arr)
    limbs = []
    while mag.any():
        low = (mag & _LIMB_MASK).astype(np.int64)
        limbs.append(np.where(neg, -low, low))
        mag >>= _LIMB_BITS
    return limbs


def _limb_split_terms(terms: Terms, nvars: int):
    """Offsets plus limb grids of an arbitrary-magnitude term map."""
    exps = list(terms)
    if nvars == 0:
        mins, shape = (), (1,)
    else:
        mins, shape = _bounding_box(exps, nvars)
    limbs: List[np.ndarray] = []
    for e, c in terms.items():
        mag = -c if c < 0 else c
        sign = -1 if c < 0 else 1
        idx = tuple(e[i] - mins[i] for i in range(nvars)) if nvars else (0,)
        level = 0
        while mag:
            if level == len(limbs):
                limbs.append(np.zeros(shape, dtype=np.int64))
            limbs[level][idx] = sign * (mag & _LIMB_MASK)
            mag >>= _LIMB_BITS
            level += 1
    return mins, limbs


def _conv_limbs(offs_a, limbs_a, offs_b, limbs_b, nvars: int) -> Terms:
    by_shift: Dict[int, np.ndarray] = {}
    for i, ga in enumerate(limbs_a):
        for j, gb in enumerate(limbs_b):
            piece = _conv_arrays(ga, gb)
            s = i + j
            if s in by_shift:
                by_shift[s] = by_shift[s] + piece.astype(object)
            else:
                by_shift[s] = piece.astype(object)
    offs = tuple(x + y for x, y in zip(offs_a, offs_b))
    terms: Terms = {}
    for s, arr in by_shift.items():
        shift = _LIMB_BITS * s
        nz = np.nonzero(arr)
        if nvars == 0:
            pairs = [((), arr[c]) for c in zip(*nz)]
        elif nvars == 1:
            pairs = [((offs[0] + int(i0),), arr[i0]) for (i0,) in zip(*nz)]
        else:
            pairs = [((offs[0] + int(i0), offs[1] + int(i1)), arr[i0, i1])
                     for i0, i1 in zip(*nz)]
        for exps, v in pairs:
            terms[exps] = terms.get(exps, 0) + (int(v) << shift)
    return {e: c for e, c in terms.items() if c}


def exact_conv_terms(a: Grid, b: Grid, nvars: int) -> Terms:
    """Exact convolution of two int64 grids, output of any magnitude."""
    if a.is_zero or b.is_zero:
        return {}
    if min(a.nnz, b.nnz) > _MAX_NNZ:
        raise NeedExact("operands too large for certified limb convolution")
    return _conv_limbs(a.offsets, _limb_split_array(a.arr),
                       b.offsets, _limb_split_array(b.arr), nvars)


# -- slots: grid when it fits, terms when it does not --------------------

class Slot:
    """One polynomial travelling through a solver pipeline."""

    __slots__ = ("nvars", "grid", "terms")

    def __init__(self, nvars: int, grid: Optional[Grid] = None,
                 terms: Optional[Terms] = None):
        self.nvars = nvars
        self.grid = grid
        self.terms = terms

    @classmethod
    def wrap(cls, terms: Terms, nvars: int) -> "Slot":
        """Grid representation when certified, term map otherwise."""
        try:
            return cls(nvars, grid=grid_from_terms(terms, nvars))
        except NeedExact:
            if nvars > 2:
                raise
            return cls(nvars, terms=dict(terms))

    @classmethod
    def zero(cls, nvars: int) -> "Slot":
        return cls(nvars, grid=_zero_grid(nvars))

    @classmethod
    def one(cls, nvars: int) -> "Slot":
        return cls(nvars, grid=unit_grid(nvars))

    @property
    def is_zero(self) -> bool:
        if self.grid is not None:
            return self.grid.is_zero
        return not self.terms

    def to_terms(self) -> Terms:
        if self.terms is not None:
            return self.terms
        return grid_terms(self.grid, self.nvars)

    def to_polynomial(self, ring: RingDescriptor) -> Polynomial:
        if self.grid is not None:
            return to_polynomial(self.grid, ring)
        return Polynomial._raw(ring, dict(self.terms))

    def _limbs(self):
        if self.grid is not None:
            return self.grid.offsets, _limb_split_array(self.grid.arr)
        return _limb_split_terms(self.terms, self.nvars)

    def scale_exponents(self, j: int) -> "Slot":
        if j == 1 or self.is_zero:
            return self
        if self.grid is not None:
            g = self.grid
            if self.nvars == 0:
                return self
            if self.nvars == 1:
                out = np.zeros((g.arr.shape[0] - 1) * j + 1, dtype=np.int64)
                out[::j] = g.arr
            else:
                r, c = g.arr.shape
                out = np.zeros(((r - 1) * j + 1, (c - 1) * j + 1),
                               dtype=np.int64)
                out[::j, ::j] = g.arr
            return Slot(self.nvars,
                        grid=Grid(tuple(o * j for o in g.offsets), out))
        return Slot(self.nvars, terms={
            tuple(e * j for e in exps): c for exps, c in self.terms.items()
        })

    def divide_exact(self, n: int) -> "Slot":
        if n == 1 or self.is_zero:
            return self
        if self.grid is not None:
            q, r = np.divmod(self.grid.arr, n)
            if r.any():
                raise ArithmeticError("expected an exact division by %d" % n)
            return Slot(self.nvars, grid=Grid(self.grid.offsets, q))
        out = {}
        for e, c in self.terms.items():
            q, r = divmod(c, n)
            if r:
                raise ArithmeticError("expected an exact division by %d" % n)
            out[e] = q
        return Slot(self.nvars, terms=out)


class SlotAccumulator:
    """Sum of products of slot pairs, certified pair by pair.

    Grid pairs run as int64 convolutions when the rigorous bounds allow
    (cheap bound, then float64 absolute-value convolution), and through
    the exact limb route otherwise; anything involving an oversized slot
    goes straight to limbs.  Results too large for int64 accumulate in a
    Python term map.
    """

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.grid_acc: Optional[Grid] = None
        self.big: Terms = {}

    def add_pair(self, a: Slot, b: Slot):
        if a.is_zero or b.is_zero:
            return
        if a.grid is not None and b.grid is not None:
            ga, gb = a.grid, b.grid
            acc_max = float(self.grid_acc.amax) if self.grid_acc is not None else 0.0
            coarse = float(min(ga.nnz, gb.nnz)) * float(ga.amax) * float(gb.amax)
            if acc_max + coarse < _LIMIT or \
                    acc_max + _abs_bound_max(ga.arr, gb.arr) < _LIMIT:
                self._merge_grid(_conv_arrays(ga.arr, gb.arr),
                                 tuple(x + y for x, y in
                                       zip(ga.offsets, gb.offsets)))
                return
            pieces = exact_conv_terms(ga, gb, self.nvars)
        else:
            oa, la = a._limbs()
            ob, lb = b._limbs()
            if min(sum(int(np.count_nonzero(x)) for x in la) or 1,
                   sum(int(np.count_nonzero(x)) for x in lb) or 1) > _MAX_NNZ:
                raise NeedExact("operands too large for certified limb convolution")
            pieces = _conv_limbs(oa, la, ob, lb, self.nvars)
        big = self.big
        for e, c in pieces.items():
            s = big.get(e, 0) + c
            if s:
                big[e] = s
            elif e in big:
                del big[e]

    def _merge_grid(self, piece: np.ndarray, offs: Tuple[int, ...]):
        if self.grid_acc is None:
            self.grid_acc = Grid(offs, piece)
            return
        cur = self.grid_acc
        if cur.offsets == offs and cur.arr.shape == piece.shape:
            self.grid_acc = Grid(offs, cur.arr + piece)
            return
        nv = self.nvars
        if nv == 0:
            self.grid_acc = Grid((), cur.arr + piece)
            return
        lo = tuple(min(cur.offsets[i], offs[i]) for i in range(nv))
        hi = tuple(max(cur.offsets[i] + cur.arr.shape[i],
                       offs[i] + piece.shape[i]) for i in range(nv))
        merged = np.zeros(tuple(hi[i] - lo[i] for i in range(nv)),
                          dtype=np.int64)
        for g_off, g_arr in ((cur.offsets, cur.arr), (offs, piece)):
            idx = tuple(slice(g_off[i] - lo[i],
                              g_off[i] - lo[i] + g_arr.shape[i])
                        for i in range(nv))
            merged[idx] += g_arr
        self.grid_acc = Grid(lo, merged)

    def result(self) -> Slot:
        if not self.big:
            return Slot(self.nvars, grid=self.grid_acc or _zero_grid(self.nvars))
        terms = self.big
        if self.grid_acc is not None and not self.grid_acc.is_zero:
            for e, c in grid_terms(self.grid_acc, self.nvars).items():
                s = terms.get(e, 0) + c
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        return Slot.wrap(terms, self.nvars)


def slot_product(a: Slot, b: Slot, nvars: int) -> Slot:
    acc = SlotAccumulator(nvars)
    acc.add_pair(a, b)
    return acc.result()


def _merge_windows(parts: List[Tuple[Tuple[int, ...], np.ndarray]],
                   nvars: int) -> Grid:
    if len(parts) == 1:
        return Grid(parts[0][0], parts[0][1])
    nv = max(nvars, 1)
    lo = tuple(min(p[0][i] for p in parts) for i in range(nvars))
    shape = tuple(
        max(p[0][i] + p[1].shape[i] for p in parts) - lo[i]
        for i in range(nvars)
    ) or (1,)
    merged = np.zeros(shape if nvars else (1,), dtype=np.int64)
    for offs, arr in parts:
        if nvars:
            idx = tuple(slice(offs[i] - lo[i], offs[i] - lo[i] + arr.shape[i])
                        for i in range(nvars))
            merged[idx] += arr
        else:
            merged += arr
    return Grid(lo if nvars else (), merged)


def slot_linear(pieces: List[Tuple[int, Slot]], nvars: int) -> Slot:
    """Integer linear combination of slots (scalar scaling, no convolution)."""
    parts: List[Tuple[Tuple[int, ...], np.ndarray]] = []
    out: Terms = {}
    total = 0.0
    for k, s in pieces:
        if not k or s.is_zero:
            continue
        if s.grid is not None:
            contribution = float(abs(k)) * float(s.grid.amax)
            if total + contribution < _LIMIT:
                total += contribution
                parts.append((s.grid.offsets, s.grid.arr * k))
                continue
        for e, c in s.to_terms().items():
            v = out.get(e, 0) + k * c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    if parts and not out:
        return Slot(nvars, grid=_merge_windows(parts, nvars))
    if parts:
        for e, c in grid_terms(_merge_windows(parts, nvars), nvars).items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return Slot.wrap(out, nvars)

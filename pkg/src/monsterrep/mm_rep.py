"""The 196884-dimensional representation modulo p = 2^k - 1.

A vector splits into seven blocks,

    A  24x24 symmetric matrix part (300 free coordinates),
    B  276   pair coordinates,
    C  276   pair-plus-Omega coordinates,
    T  759 octads x 64 suboctads,
    X  2048 code classes x 24 points   (monomial short-vector part),
    Z  2048 x 24   'plus' tensor part,
    Y  2048 x 24   'minus' tensor part,

packed into one uint64 buffer per vector.  The in-memory lane order is
chosen so the non-monomial kernels run on whole words: T is stored as 64
suboctad planes of 759 lanes, X/Z/Y as 24 point planes of 2048 lanes
(each plane word aligned).  The logical coordinate order (used by the
MMV1 file format, ``unpack`` and the norm form) is the block order above
with A as diagonal-then-pairs, T octad-major and X/Z/Y class-major.

Generator words act through four kernel families:

* monomial atoms (x_e / y_e / z_e and automorphism atoms) become one
  signed lane permutation over T/X/Z/Y plus closed-form sign/swap rules
  on the small blocks;
* the triality generator mixes (A_ij, B_ij, C_ij) by a 3x3 matrix with
  halving, rotates X -> Y -> Z -> X with sign masks, and runs six
  butterfly layers per octad on T;
* the extra generator acts monomially on B/C/T/X through conjugation in
  the extraspecial group, by 4x4 column blocks on A, and by a sign
  twisted 16-point Hadamard transform tensored with the 24-coordinate
  block matrix on Z/Y;
* everything else is composition.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _rng, aut_pl, golay, modp_core, qx_leech
from ._kernels import GatherTable, gather_signed
from .aut_pl import StdAutomorphism
from .golay import CocodeElement, EXPAND
from .modp_core import Modulus, modulus
from .parker_loop import PMAP_TABLE, THETA, ParkerLoopElement
from .qx_leech import (N_SHORT, OFF_C, OFF_T, OFF_X, SHORT_VALUES,
                       class_to_coords, coords_to_class)

DIM = 196884

_CLASS_COORDS = class_to_coords(np.arange(2048)).astype(np.int64)
_CLASS_MASKS = EXPAND[_CLASS_COORDS].astype(np.int64)
_CLASS_P = PMAP_TABLE[_CLASS_COORDS].astype(np.int64)

_PAIR_I = qx_leech._PAIR_I.astype(np.int64)
_PAIR_J = qx_leech._PAIR_J.astype(np.int64)

# n(t): half the size of the canonical suboctad representative, mod 2.
_SUB_N64 = golay.SUB_NBIT[0].astype(np.int64)
_SUB_PAR = (np.bitwise_count(np.arange(64, dtype=np.uint64)) & 1).astype(np.int64)


def _canon(codes):
    b = (codes >> 5) & 1
    return codes ^ b * 0x3F, b


# ---------------------------------------------------------------------------
# Packed layout

class Layout:
    """Word offsets and lane addressing for one modulus."""

    def __init__(self, m: Modulus):
        self.m = m
        L = m.lanes
        self.wA = 0
        self.nA = m.words_for(576)
        self.wB = self.nA
        self.nB = m.words_for(276)
        self.wC = self.wB + self.nB
        self.wT = self.wC + self.nB
        self.WT = m.words_for(759)
        self.wX = self.wT + 64 * self.WT
        self.WX = m.words_for(2048)
        self.wZ = self.wX + 24 * self.WX
        self.wY = self.wZ + 24 * self.WX
        self.n_words = self.wY + 24 * self.WX

        o = np.arange(759)
        t = np.arange(64)
        self.lane_T = (self.wT + t[None, :] * self.WT) * L + o[:, None]
        chi = np.arange(2048)
        i24 = np.arange(24)
        self.lane_X = (self.wX + i24[None, :] * self.WX) * L + chi[:, None]
        self.lane_Z = (self.wZ + i24[None, :] * self.WX) * L + chi[:, None]
        self.lane_Y = (self.wY + i24[None, :] * self.WX) * L + chi[:, None]
        self.lane_A = np.arange(576)
        self.lane_B = self.wB * L + np.arange(276)
        self.lane_C = self.wC * L + np.arange(276)

        # logical (file-order) coordinate -> lane
        log = np.empty(DIM, dtype=np.int64)
        log[0:24] = 25 * np.arange(24)
        log[24:300] = 24 * _PAIR_I + _PAIR_J
        self._mirror = 24 * _PAIR_J + _PAIR_I
        log[300:576] = self.lane_B
        log[576:852] = self.lane_C
        log[852:852 + 48576] = self.lane_T.ravel()
        log[852 + 48576:852 + 48576 + 49152] = self.lane_X.ravel()
        base = 852 + 48576 + 49152
        log[base:base + 49152] = self.lane_Z.ravel()
        log[base + 49152:] = self.lane_Y.ravel()
        self.log_lane = log

        # flat short-vector index -> lane (same block order as qx_leech)
        sv = np.empty(N_SHORT, dtype=np.int64)
        sv[:OFF_C] = self.lane_B
        sv[OFF_C:OFF_T] = self.lane_C
        sv[OFF_T:OFF_X] = self.lane_T.ravel()
        sv[OFF_X:] = self.lane_X.ravel()
        self.short_lane = sv

        # temp tensor for the 16-point transform: rows (group, dG, i)
        self.WH = m.words_for(64)
        self.tmp_words = 4 * 16 * 24 * self.WH
        g4 = np.arange(4)
        d16 = np.arange(16)
        h64 = np.arange(64)
        self.lane_TMP = (((g4[:, None, None, None] * 16 + d16[None, :, None, None]) * 24
                          + i24[None, None, :, None]) * self.WH) * L + h64[None, None, None, :]

        self.word_of = log // L
        self.shift_of = ((log % L) * m.k).astype(np.uint64)

    def extract(self, buf, lanes):
        L, k = self.m.lanes, self.m.k
        lanes = np.asarray(lanes)
        vals = ((buf[lanes // L] >> ((lanes % L) * k).astype(np.uint64))
                & np.uint64(self.m.p)).astype(np.int64)
        vals[vals == self.m.p] = 0
        return vals

    def inject(self, buf, lanes, vals):
        """Write values into lanes (lanes must currently be zero)."""
        L, k = self.m.lanes, self.m.k
        lanes = np.asarray(lanes).ravel()
        order = np.argsort(lanes % L, kind="stable")
        lanes = lanes[order]
        v = np.asarray(vals, dtype=np.uint64).ravel()[order]
        slots = lanes % L
        for s in range(L):
            sel = slots == s
            if sel.any():
                buf[lanes[sel] // L] |= v[sel] << np.uint64(s * k)


@lru_cache(maxsize=8)
def layout(p: int) -> Layout:
    return Layout(modulus(p))


# ---------------------------------------------------------------------------
# Vectors

class MmVector:
    __slots__ = ("mod", "buf")

    def __init__(self, mod: Modulus, buf: np.ndarray):
        self.mod = mod
        self.buf = buf

    @property
    def p(self) -> int:
        return self.mod.p

    def layout(self) -> Layout:
        return layout(self.mod.p)

    def copy(self) -> "MmVector":
        return MmVector(self.mod, self.buf.copy())

    def unpack(self) -> np.ndarray:
        lay = self.layout()
        vals = ((self.buf[lay.word_of] >> lay.shift_of)
                & np.uint64(self.mod.p)).astype(np.int64)
        vals[vals == self.mod.p] = 0
        return vals

    def __eq__(self, other):
        if not isinstance(other, MmVector):
            return NotImplemented
        return self.mod.p == other.mod.p and bool(
            np.array_equal(self.unpack(), other.unpack()))

    def __add__(self, other):
        if self.mod.p != other.mod.p:
            raise ValueError("modulus mismatch")
        return MmVector(self.mod, modp_core.add_words(self.buf, other.buf, self.mod))

    def __neg__(self):
        return MmVector(self.mod, modp_core.neg_words(self.buf, self.mod))

    def __repr__(self):
        return f"MmVector(p={self.mod.p})"


def _as_p(p) -> int:
    return p.p if isinstance(p, Modulus) else int(p)


def new_zero(p) -> MmVector:
    lay = layout(_as_p(p))
    return MmVector(lay.m, np.zeros(lay.n_words, dtype=np.uint64))


def from_coords(p, vals) -> MmVector:
    p = _as_p(p)
    vals = np.asarray(vals, dtype=np.int64)
    if vals.shape != (DIM,):
        raise ValueError(f"expected {DIM} coordinates")
    if vals.min() < 0 or vals.max() >= p:
        raise ValueError(f"coordinates must lie in 0..{p - 1}")
    lay = layout(p)
    v = new_zero(p)
    lay.inject(v.buf, lay.log_lane, vals)
    lay.inject(v.buf, lay._mirror, vals[24:300])
    return v


def rand(p, seed: int) -> MmVector:
    p = _as_p(p)
    return from_coords(p, _rng.rand_ints(seed, 0, DIM, p))


def add(a: MmVector, b: MmVector) -> MmVector:
    return a + b


def basis_vector(p, logical_index: int) -> MmVector:
    p = _as_p(p)
    vals = np.zeros(DIM, dtype=np.int64)
    vals[logical_index] = 1
    return from_coords(p, vals)


def scale(v: MmVector, s: int) -> MmVector:
    return from_coords(v.p, (v.unpack() * (s % v.p)) % v.p)


def equal(a: MmVector, b: MmVector) -> bool:
    return a == b


NORM_WEIGHT = np.ones(DIM, dtype=np.int64)
NORM_WEIGHT[24:300] = 2


def norm_form(v: MmVector) -> int:
    """Weighted squared norm mod p: weight 2 on the pair part of A."""
    c = v.unpack()
    return int((NORM_WEIGHT * c % v.p * c).sum() % v.p)


# MMV1 file format ----------------------------------------------------------

MAGIC = b"MMV1"


def write_vector(v: MmVector, path):
    data = MAGIC + bytes([v.p]) + DIM.to_bytes(4, "little") \
        + v.unpack().astype(np.uint8).tobytes()
    with open(path, "wb") as fh:
        fh.write(data)


def read_vector(path) -> MmVector:
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:4] != MAGIC:
        raise ValueError("not an MMV1 vector file")
    p = data[4]
    n = int.from_bytes(data[5:9], "little")
    if n != DIM or len(data) != 9 + DIM:
        raise ValueError("corrupt MMV1 file")
    return from_coords(p, np.frombuffer(data[9:], dtype=np.uint8).astype(np.int64))


# ---------------------------------------------------------------------------
# Small-block (A/B/C) access

def _get_smalls(v: MmVector):
    lay = v.layout()
    A = lay.extract(v.buf, lay.lane_A).reshape(24, 24)
    B = lay.extract(v.buf, lay.lane_B)
    C = lay.extract(v.buf, lay.lane_C)
    return A, B, C


def _put_smalls(out: MmVector, A, B, C):
    lay = out.layout()
    p = out.p
    lay.inject(out.buf, lay.lane_A, np.asarray(A, dtype=np.int64).ravel() % p)
    lay.inject(out.buf, lay.lane_B, np.asarray(B, dtype=np.int64) % p)
    lay.inject(out.buf, lay.lane_C, np.asarray(C, dtype=np.int64) % p)


# ---------------------------------------------------------------------------
# Generator atoms

@dataclass(frozen=True)
class GeneratorAtom:
    """tag in {x,y,z,p,d,t,l}; payload is a 13-bit loop value (x/y/z),
    an automorphism (p), a 12-bit cocode value (d) or an exponent (t/l)."""
    tag: str
    payload: object

    def __post_init__(self):
        if self.tag in ("x", "y", "z"):
            if not 0 <= self.payload < 8192:
                raise ValueError("loop payload must fit in 13 bits")
        elif self.tag == "d":
            if not 0 <= self.payload < 4096:
                raise ValueError("cocode payload must fit in 12 bits")
        elif self.tag in ("t", "l"):
            if self.payload not in (1, 2):
                raise ValueError("exponent must be 1 or 2")
        elif self.tag == "p":
            if not isinstance(self.payload, StdAutomorphism):
                raise ValueError("p atom needs a standard automorphism")
        else:
            raise ValueError(f"unknown atom tag {self.tag!r}")

    def key(self):
        if self.tag == "p":
            return ("p", self.payload.perm.images, self.payload.diag.coords)
        return (self.tag, self.payload)


def atom(tag: str, payload) -> GeneratorAtom:
    return GeneratorAtom(tag, payload)


# ---------------------------------------------------------------------------
# Monomial atoms: logical signed-permutation maps
#
# Maps are built in source order: lane src -> sign * lane img.

def _theta_vec(dc, ec):
    return golay.pair_bits(THETA[np.asarray(dc, dtype=np.int64)], ec).astype(np.int64)


def _xyz_maps(tag: str, e13: int):
    ce = e13 & 0xFFF
    se = e13 >> 12
    emask = int(EXPAND[ce])

    # T part
    o = np.arange(759)[:, None]
    t = np.arange(64)[None, :]
    pair_e = (np.bitwise_count((golay.SUB_REP & np.uint32(emask)).astype(np.uint32))
              & 1).astype(np.int64)
    c_oe = ((np.bitwise_count(golay.OCTAD_MASKS & np.uint32(emask)) >> 1) & 1).astype(np.int64)
    if tag == "x":
        t_img_o, t_img_t = o + 0 * t, t + 0 * o
        t_sgn = c_oe[:, None] ^ pair_e
    else:
        to = golay.suboctad_of_mask_vec(
            np.arange(759), golay.OCTAD_MASKS.astype(np.int64) & emask)
        t_img_o = o + 0 * t
        t_img_t = t ^ to[:, None]
        t_sgn = pair_e if tag == "y" else np.broadcast_to(c_oe[:, None], (759, 64)).copy()

    # row maps on the 2048 code classes
    c0 = _CLASS_COORDS
    th_c0_ce = _theta_vec(c0, ce)
    th_ce_c0 = golay.pair_bits(int(THETA[ce]), c0).astype(np.int64)
    cls_xor, bflip = _canon(c0 ^ ce)
    chi_xor = coords_to_class(cls_xor)
    chi_id = np.arange(2048)
    pe = int(PMAP_TABLE[ce])
    c_ce_c0 = ((np.bitwise_count((_CLASS_MASKS & emask).astype(np.uint64)) >> 1) & 1).astype(np.int64)

    colsel = ((emask >> np.arange(24)) & 1).astype(np.int64)
    zero24 = np.zeros(24, dtype=np.int64)

    if tag == "x":
        xmap = (chi_id, c_ce_c0, colsel)                        # X
        zmap = ("Z", chi_xor, se ^ pe ^ th_ce_c0, zero24)       # Z <- (e^-1 d)
        ymap = ("Y", chi_xor, se ^ pe ^ th_ce_c0 ^ bflip, zero24)
    elif tag == "y":
        xmap = (chi_xor, se ^ th_c0_ce, zero24)                 # X: d -> d e
        zmap = ("Z", chi_xor, se ^ th_c0_ce, colsel)            # (d e)^+
        ymap = ("Y", chi_id, c_ce_c0, colsel)                   # (e^-1 d e)^-
    else:
        xmap = (chi_xor, se ^ pe ^ th_ce_c0, colsel)            # X: d -> e^-1 d
        zmap = ("Z", chi_id, c_ce_c0, colsel)                   # (e^-1 d e)^+
        ymap = ("Y", chi_xor, se ^ th_c0_ce ^ bflip, colsel)    # (d e)^-

    return dict(
        t_img_o=np.broadcast_to(t_img_o, (759, 64)),
        t_img_t=np.broadcast_to(t_img_t, (759, 64)),
        t_sgn=np.broadcast_to(t_sgn, (759, 64)),
        x_row=(xmap[0], xmap[1]), x_col=(np.arange(24), xmap[2]),
        z_dst=zmap[0], z_row=(zmap[1], zmap[2]), z_col=(np.arange(24), zmap[3]),
        y_dst=ymap[0], y_row=(ymap[1], ymap[2]), y_col=(np.arange(24), ymap[3]),
    )


def _pi_maps(pi: StdAutomorphism):
    par = aut_pl.parity(pi)
    images = pi.perm.images
    img24 = np.array(images, dtype=np.int64)

    oct_img_masks = golay.permute_mask_vec(golay.OCTAD_MASKS, images)
    oct_img = golay.OCTAD_INDEX_OF_COORD[
        golay.compress_vec(oct_img_masks).astype(np.int64)].astype(np.int64)
    rep_img = golay.permute_mask_vec(golay.SUB_REP.ravel().astype(np.uint32), images)
    t_img_t = golay.suboctad_of_mask_vec(
        np.repeat(oct_img, 64), rep_img.astype(np.int64)).reshape(759, 64)
    oct_sign = (aut_pl.apply_value_vec(pi, golay.OCTAD_COORDS.astype(np.int64)) >> 12) & 1
    t_img_o = np.broadcast_to(oct_img[:, None], (759, 64))
    # the suboctad label carries Omega^{|delta|/2}, and Omega -> -Omega when
    # the automorphism is odd
    t_sgn = oct_sign[:, None] ^ (par * _SUB_N64)[None, :]

    w = aut_pl.apply_value_vec(pi, _CLASS_COORDS)
    wc, ws = w & 0xFFF, (w >> 12) & 1
    wc0, bflip = _canon(wc)
    chi_img = coords_to_class(wc0)

    m_lane = (_CLASS_P[:, None]
              ^ ((_CLASS_MASKS[:, None] >> np.arange(24)[None, :]) & 1)).astype(np.int64)
    zero = np.zeros((2048, 24), dtype=np.int64)

    maps = dict(
        t_img_o=np.broadcast_to(t_img_o, (759, 64)),
        t_img_t=t_img_t, t_sgn=np.broadcast_to(t_sgn, (759, 64)),
        x_row=(chi_img, ws), x_col=(img24, np.zeros(24, dtype=np.int64)),
        x_lane=(m_lane if par else zero),
        par=par,
    )
    if par == 0:
        maps["z_dst"], maps["z_row"] = "Z", (chi_img, ws)
        maps["y_dst"], maps["y_row"] = "Y", (chi_img, ws ^ bflip)
    else:
        maps["z_dst"], maps["z_row"] = "Y", (chi_img, ws ^ bflip)
        maps["y_dst"], maps["y_row"] = "Z", (chi_img, ws)
    maps["z_col"] = maps["y_col"] = (img24, np.zeros(24, dtype=np.int64))
    return maps


_MONO_CACHE = {}


def _monomial_gather(p: int, at: GeneratorAtom) -> tuple:
    key = (p, at.key())
    hit = _MONO_CACHE.get(key)
    if hit is not None:
        return hit
    if at.tag in ("x", "y", "z"):
        maps = _xyz_maps(at.tag, at.payload)
    elif at.tag == "p":
        maps = _pi_maps(at.payload)
    else:
        maps = _pi_maps(StdAutomorphism(CocodeElement(at.payload),
                                        aut_pl.IDENTITY_PERM))
    lay = layout(p)

    src, dst, sgn = [], [], []
    src.append(lay.lane_T.ravel())
    dst.append(lay.lane_T[maps["t_img_o"].ravel(), maps["t_img_t"].ravel()])
    sgn.append(maps["t_sgn"].ravel())

    lane_of = {"X": lay.lane_X, "Z": lay.lane_Z, "Y": lay.lane_Y}
    xl = maps.get("x_lane")
    for blk, dstname, (rimg, rsgn), (cimg, csgn), lane_extra in (
            ("X", "X", maps["x_row"], maps["x_col"], xl),
            ("Z", maps["z_dst"], maps["z_row"], maps["z_col"], None),
            ("Y", maps["y_dst"], maps["y_row"], maps["y_col"], None)):
        src.append(lane_of[blk].ravel())
        dst.append(lane_of[dstname][np.broadcast_to(np.asarray(rimg)[:, None], (2048, 24)).ravel(),
                                    np.broadcast_to(np.asarray(cimg)[None, :], (2048, 24)).ravel()])
        s = (np.asarray(rsgn).reshape(-1, 1) ^ np.asarray(csgn).reshape(1, -1))
        s = np.broadcast_to(s, (2048, 24))
        if lane_extra is not None:
            s = s ^ lane_extra
        sgn.append(s.ravel())

    table = GatherTable(np.concatenate(dst), np.concatenate(src),
                        np.concatenate(sgn) & 1, lay.m.lanes, lay.m.k, lay.m.p)
    small = _small_mono(at, maps)
    if len(_MONO_CACHE) > 128:
        _MONO_CACHE.clear()
    _MONO_CACHE[key] = (table, small)
    return table, small


def _small_mono(at: GeneratorAtom, maps):
    """Closed-form A/B/C transform for a monomial atom."""
    if at.tag in ("x", "y", "z"):
        emask = int(EXPAND[at.payload & 0xFFF])
        sgn24 = ((emask >> np.arange(24)) & 1).astype(np.int64)
        pairflip = (sgn24[_PAIR_I] ^ sgn24[_PAIR_J]).astype(bool)

        def f(A, B, C, p, tag=at.tag):
            if tag == "x":
                A2 = A
            else:
                s = 1 - 2 * sgn24
                A2 = (s[:, None] * A * s[None, :]) % p
            if tag == "x":
                B2 = np.where(pairflip, (-B) % p, B)
                C2 = np.where(pairflip, (-C) % p, C)
            elif tag == "y":
                B2 = np.where(pairflip, (-C) % p, B)
                C2 = np.where(pairflip, (-B) % p, C)
            else:
                B2 = np.where(pairflip, C, B)
                C2 = np.where(pairflip, B, C)
            return A2, B2, C2
        return f

    pi = at.payload if at.tag == "p" else StdAutomorphism(
        CocodeElement(at.payload), aut_pl.IDENTITY_PERM)
    img = np.array(pi.perm.images, dtype=np.int64)
    par = maps["par"]
    pair_img = qx_leech._PAIR_IDX[img[_PAIR_I], img[_PAIR_J]]

    def f(A, B, C, p):
        A2 = np.zeros_like(A)
        A2[img[:, None], img[None, :]] = A
        B2 = np.zeros_like(B)
        B2[pair_img] = B
        C2 = np.zeros_like(C)
        C2[pair_img] = (-C) % p if par else C
        return A2, B2, C2
    return f


def _apply_monomial(v: MmVector, at: GeneratorAtom) -> MmVector:
    table, small = _monomial_gather(v.p, at)
    out = new_zero(v.p)
    gather_signed(out.buf, v.buf, table, v.mod.p, v.mod.k)
    A, B, C = _get_smalls(v)
    _put_smalls(out, *small(A, B, C, v.p))
    return out


# ---------------------------------------------------------------------------
# Triality kernel

@lru_cache(maxsize=8)
def _tau_masks(p: int):
    lay = layout(p)
    m = lay.m
    # (-1)^{<d,i>} per (class, point) lane of an X/Z/Y block
    di = np.zeros((24, lay.WX * m.lanes), dtype=np.int64)
    pp = np.zeros((24, lay.WX * m.lanes), dtype=np.int64)
    bits_p = _CLASS_P
    for i in range(24):
        di[i, :2048] = (_CLASS_MASKS >> i) & 1
        pp[i, :2048] = bits_p
    def to_words(bits):
        return modp_core.pack_words((bits * p).ravel(), m).reshape(24, lay.WX)
    mask_di = to_words(di)
    mask_p = to_words(pp)
    # x_tau plane signs and the parity reindex of the suboctad planes
    n_t = ((_SUB_N64 != 0))
    plane_reindex = np.where(_SUB_PAR == 1, np.arange(64) ^ 63, np.arange(64))
    return mask_di, mask_p, n_t, plane_reindex


def _tau_once(v: MmVector) -> MmVector:
    p, m, lay = v.p, v.mod, v.layout()
    mask_di, mask_p, n_t, reindex = _tau_masks(p)
    out = new_zero(p)

    # small blocks: diag fixed, (a, b, c) -> ((b+c)/2, a+(b-c)/2, -a+(b-c)/2)
    A, B, C = _get_smalls(v)
    half = (p + 1) // 2
    a = A[_PAIR_I, _PAIR_J]
    s = (B + C) * half % p
    d = (B - C) * half % p
    A2 = A.copy()
    A2[_PAIR_I, _PAIR_J] = A2[_PAIR_J, _PAIR_I] = s
    B2 = (a + d) % p
    C2 = (-a + d) % p
    _put_smalls(out, A2, B2, C2)

    # T: y_tau (six butterfly layers, three halved, parity reindex), then x_tau
    T = v.buf[lay.wT:lay.wX].reshape(64, lay.WT)
    W = T.copy()
    for layer in range(6):
        idx = np.arange(64)
        lowsel = (idx >> layer) & 1 == 0
        a_ = W[idx[lowsel]]
        b_ = W[idx[lowsel] | (1 << layer)]
        s_, d_ = modp_core.butterfly_words(a_, b_, m, scale_half=layer < 3)
        W[idx[lowsel]] = s_
        W[idx[lowsel] | (1 << layer)] = d_
    W = W[reindex]
    W[n_t] = modp_core.neg_words(W[n_t], m)
    out.buf[lay.wT:lay.wX] = W.ravel()

    # X -> Y -> Z -> X with sign masks
    Xb = v.buf[lay.wX:lay.wZ]
    Zb = v.buf[lay.wZ:lay.wY]
    Yb = v.buf[lay.wY:]
    out.buf[lay.wY:] = Xb ^ mask_di.ravel()
    out.buf[lay.wZ:lay.wY] = Yb ^ mask_di.ravel() ^ mask_p.ravel()
    out.buf[lay.wX:lay.wZ] = Zb ^ mask_p.ravel()
    return out


def apply_tau(v: MmVector, e: int) -> MmVector:
    if e not in (1, 2):
        raise ValueError("exponent must be 1 or 2")
    out = _tau_once(v)
    return _tau_once(out) if e == 2 else out


# ---------------------------------------------------------------------------
# Kernel for the non-monomial generator

@dataclass(frozen=True)
class Basis4096Index:
    """Grey-frame basis label of a tensor-block row: sector sign, g_0
    exponent, 4-bit index into the even grey products, coloured index."""
    sigma: int
    kappa: int
    d: int
    h: int

    def __post_init__(self):
        if not (self.sigma in (0, 1) and self.kappa in (0, 1)
                and 0 <= self.d < 16 and 0 <= self.h < 64):
            raise ValueError("index out of range")


def basis4096_from_storage(sector: int, chi: int):
    """(Basis4096Index, sign) of storage row chi in the plus (0) or
    minus (1) tensor block."""
    c0 = int(class_to_coords(chi))
    g6 = c0 & 0x3F
    if bin(g6 & 0x3E).count("1") % 2 == 0:
        kappa, dpat, flip = g6 & 1, (g6 >> 1) & 0x1F, 0
    else:
        kappa, dpat, flip = (g6 & 1) ^ 1, ((g6 >> 1) & 0x1F) ^ 0x1F, 1
    return Basis4096Index(sector, kappa, dpat & 0xF, c0 >> 6), sector * flip


def basis4096_to_storage(idx: Basis4096Index):
    """(sector, chi, sign) holding the given basis vector."""
    dpat = idx.d | ((bin(idx.d).count("1") & 1) << 4)
    cu = idx.kappa | dpat << 1 | idx.h << 6
    flip = (cu >> 5) & 1
    chi = int(coords_to_class(cu ^ flip * 0x3F))
    return idx.sigma, chi, idx.sigma * flip


_D16_PAT = np.arange(16, dtype=np.int64)
_D16_PAT = _D16_PAT | ((np.bitwise_count(_D16_PAT.astype(np.uint64)).astype(np.int64) & 1) << 4)
_W2_5 = np.array([golay.W2_TABLE[int(b)] for b in
                  np.bitwise_count(_D16_PAT.astype(np.uint64))], dtype=np.int64)


@lru_cache(maxsize=4)
def _xi_sgn16(e: int):
    inter = (np.bitwise_count((_D16_PAT[:, None] & _D16_PAT[None, :]).astype(np.uint64))
             & 1).astype(np.int64)
    if e == 1:
        sg = inter ^ _W2_5[None, :] ^ 1          # [d, e] with column twist w2(e)+1
    else:
        sg = inter ^ _W2_5[:, None] ^ 1          # row twist w2(d)+1
    return 1 - 2 * sg                            # +-1 matrix, index [d_src, e_dst]


# The 16-point kernel factors through a plain Walsh-Hadamard transform:
# the pairing of even 5-bit grey patterns in 4 free coordinates is
# <m, m'> + par(m) par(m'), i.e. the form I+J, and (I+J)^2 = I, so the
# sign-twisted transform is WHT then the involutive reindex
# m -> m ^ (par(m) * 15) plus row sign twists.
_PAR4 = (np.bitwise_count(np.arange(16, dtype=np.uint64)) & 1).astype(np.int64)
_REIDX16 = np.arange(16) ^ (_PAR4 * 15)


def _had16(block, m):
    """(1/4) WHT_16 along axis 0 of a (16, ...) word array."""
    W = block.copy()
    idx = np.arange(16)
    for layer in range(4):
        low = idx[(idx >> layer) & 1 == 0]
        s, d = modp_core.butterfly_words(W[low], W[low | 1 << layer], m,
                                         scale_half=layer < 2)
        W[low] = s
        W[low | 1 << layer] = d
    return W


def _xi_group_map(e: int):
    out = np.zeros(4, dtype=np.int64)
    for g in range(4):
        sig, kap = g >> 1, g & 1
        if e == 1:
            sig2, kap2 = (kap ^ sig ^ 1), sig
        else:
            sig2, kap2 = kap, (kap ^ sig ^ 1)
        out[g] = sig2 << 1 | kap2
    return out


@lru_cache(maxsize=8)
def _xi_98280_tables(p: int):
    lay = layout(p)
    out = []
    for e in (1, 2):
        img = qx_leech.conj_by_xi_vec(SHORT_VALUES, e)
        idx, sgn, ok = qx_leech.short_index_vec(img)
        assert ok.all()
        out.append(GatherTable(lay.short_lane[idx], lay.short_lane,
                               sgn, lay.m.lanes, lay.m.k, lay.m.p))
    return out


@lru_cache(maxsize=8)
def _xi_4096_gather(p: int):
    """Lane correspondence between Z/Y storage and the grey-frame basis
    tensor (group, dG, point, coloured index)."""
    lay = layout(p)
    g = np.arange(4)[:, None, None, None]
    d = np.arange(16)[None, :, None, None]
    i = np.arange(24)[None, None, :, None]
    h = np.arange(64)[None, None, None, :]
    sig, kap = g >> 1, g & 1
    cu = kap | (_D16_PAT[None, :, None, None] << 1) | (h << 6)
    c0, b = _canon(cu)
    chi = coords_to_class(c0)
    lane_vec = np.where(sig == 0,
                        lay.lane_Z[chi, i + 0 * g],
                        lay.lane_Y[chi, i + 0 * g])
    sign = np.broadcast_to((sig * b) & 1, lane_vec.shape)
    tmp = np.broadcast_to(lay.lane_TMP[:, :, :, :], lane_vec.shape)
    fwd = GatherTable(tmp.ravel(), lane_vec.ravel(), sign.ravel(),
                      lay.m.lanes, lay.m.k, lay.m.p)
    back = GatherTable(lane_vec.ravel(), tmp.ravel(), sign.ravel(),
                       lay.m.lanes, lay.m.k, lay.m.p)
    return fwd, back


def _xi_24_pass(block, m, e):
    """Column transform on 24 planes: plane row c -> c @ (M/2)."""
    M = qx_leech.XI4_NUM[e - 1]
    out = np.zeros_like(block)
    for col in range(6):
        planes = block[4 * col:4 * col + 4]
        for mprime in range(4):
            acc = None
            for mm in range(4):
                term = planes[mm] if M[mm, mprime] > 0 else modp_core.neg_words(planes[mm], m)
                acc = term if acc is None else modp_core.add_words(acc, term, m)
            out[4 * col + mprime] = modp_core.halve_words(acc, m)
    return out


def apply_xi(v: MmVector, e: int) -> MmVector:
    if e not in (1, 2):
        raise ValueError("exponent must be 1 or 2")
    p, m, lay = v.p, v.mod, v.layout()
    out = new_zero(p)

    # A: congruence with the block-diagonal 24x24 matrix, exact integers
    A, _, _ = _get_smalls(v)
    M = qx_leech.xi24_matrix_num(e)
    inv4 = pow(4, -1, p)
    A2 = (M.T @ A @ M) * inv4 % p
    lay.inject(out.buf, lay.lane_A, A2.ravel())

    # B/C/T/X: signed permutation from conjugation in the extraspecial group
    table = _xi_98280_tables(p)[e - 1]
    gather_signed(out.buf, v.buf, table, p, m.k)

    # Z/Y: 16-point transform over the grey frame, tensor the 24-part
    fwd, back = _xi_4096_gather(p)
    tmp = np.zeros(lay.tmp_words, dtype=np.uint64)
    gather_signed(tmp, v.buf, fwd, p, m.k)
    tmp4 = tmp.reshape(4, 16, 24 * lay.WH)
    gmap = _xi_group_map(e)
    if e == 2:                                   # row twist (-1)^{w2(d)} first
        tmp4[:, _W2_5 == 1] = modp_core.neg_words(tmp4[:, _W2_5 == 1], m)
    W = _had16(np.swapaxes(tmp4, 0, 1), m)       # (16, 4, ...)
    W = W[_REIDX16]
    if e == 1:                                   # column twist (-1)^{w2(e)+1}
        W[_W2_5 == 0] = modp_core.neg_words(W[_W2_5 == 0], m)
    else:
        W = modp_core.neg_words(W, m)
    tout = np.swapaxes(W, 0, 1)[np.argsort(gmap)]
    zy = np.zeros(lay.n_words, dtype=np.uint64)
    gather_signed(zy, np.ascontiguousarray(tout).ravel(), back, p, m.k)

    Z2 = _xi_24_pass(zy[lay.wZ:lay.wY].reshape(24, lay.WX), m, e)
    Y2 = _xi_24_pass(zy[lay.wY:].reshape(24, lay.WX), m, e)
    out.buf[lay.wZ:lay.wY] = Z2.ravel()
    out.buf[lay.wY:] = Y2.ravel()
    return out


# ---------------------------------------------------------------------------
# Dispatch

def apply_atom(v: MmVector, at: GeneratorAtom) -> MmVector:
    if at.tag in ("x", "y", "z", "p", "d"):
        return _apply_monomial(v, at)
    if at.tag == "t":
        return apply_tau(v, at.payload)
    return apply_xi(v, at.payload)


def apply_xyz(v: MmVector, tag: str, d: ParkerLoopElement) -> MmVector:
    return apply_atom(v, GeneratorAtom(tag, d.value))


def apply_pi(v: MmVector, pi: StdAutomorphism) -> MmVector:
    return apply_atom(v, GeneratorAtom("p", pi))


def apply_word(v: MmVector, word) -> MmVector:
    for at in word:
        v = apply_atom(v, at)
    return v

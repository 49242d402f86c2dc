"""Batched nullspace classification of 0/1 matrices modulo a large prime.

Ranks computed modulo the fixed prime below are provably exact for the
matrix sizes this package enumerates: every k x k minor of a 0/1 matrix is
bounded in absolute value by the product over any k rows of sqrt(row sum),
so as long as that product stays below the prime, a minor vanishes mod p
iff it vanishes over the integers, and row-reduced entries (quotients of
such minors) have exact zero patterns.  Each batch asserts the bound and
refuses to answer when it cannot be rigorous.

Equality of two reduced kernel vectors is only used as a candidate filter
(exact rational classification confirms every ambi candidate), so it needs
no bound of its own: truly equal vectors always compare equal mod p.
"""

from __future__ import annotations

import numpy as np

from .errors import CapExceeded

PRIME = 2_147_483_629  # < 2**31, so products of residues fit in int64


def _assert_rigorous(mats: np.ndarray) -> None:
    rowsums = mats.sum(axis=2, dtype=np.int64)
    log2bound = 0.5 * np.log2(np.maximum(rowsums, 1)).sum(axis=1)
    if np.any(log2bound >= 30.9):
        raise CapExceeded("matrix too dense for rigorous modular ranks")


def _inv_mod(a: np.ndarray) -> np.ndarray:
    result = np.ones_like(a)
    base = a % PRIME
    e = PRIME - 2
    while e:
        if e & 1:
            result = result * base % PRIME
        base = base * base % PRIME
        e >>= 1
    return result


def rref_mod(mats: np.ndarray):
    """In-place reduced row echelon form mod PRIME for a (B, r, c) batch.

    Returns (rank, pivcols) with pivcols a (B, c) boolean array.
    """
    b, r, c = mats.shape
    row = np.zeros(b, dtype=np.int64)
    pivcols = np.zeros((b, c), dtype=bool)
    rowidx = np.arange(r, dtype=np.int64)[None, :]
    for col in range(c):
        cand = (mats[:, :, col] != 0) & (rowidx >= row[:, None])
        has = cand.any(axis=1)
        idx = np.nonzero(has)[0]
        if idx.size == 0:
            continue
        piv = np.argmax(cand[idx], axis=1)
        cur = row[idx]
        need = piv != cur
        if need.any():
            sidx = idx[need]
            pr = piv[need]
            cr = cur[need]
            tmp = mats[sidx, pr].copy()
            mats[sidx, pr] = mats[sidx, cr]
            mats[sidx, cr] = tmp
        pivvals = mats[idx, cur, col]
        inv = _inv_mod(pivvals)
        mats[idx, cur, :] = mats[idx, cur, :] * inv[:, None] % PRIME
        colv = mats[idx, :, col].copy()
        colv[np.arange(idx.size), cur] = 0
        nz = colv.any(axis=1)
        if nz.any():
            sub = idx[nz]
            factors = colv[nz]
            pivrows = mats[sub, row[sub], :]
            mats[sub] = (mats[sub] - factors[:, :, None] * pivrows[:, None, :]) % PRIME
        pivcols[idx, col] = True
        row[idx] += 1
    return row, pivcols


def nullity_mod(mats: np.ndarray) -> np.ndarray:
    """Exact nullities of a batch of small 0/1 matrices."""
    _assert_rigorous(mats)
    work = mats.astype(np.int64, copy=True)
    rank, _ = rref_mod(work)
    return mats.shape[2] - rank


def _kernel_vectors_nullity1(rref: np.ndarray, pivcols: np.ndarray) -> np.ndarray:
    """Kernel vectors (one free column each) for matrices of nullity 1."""
    b, _, c = rref.shape
    free = np.argmax(~pivcols, axis=1)
    x = np.zeros((b, c), dtype=np.int64)
    x[np.arange(b), free] = 1
    rows_of = np.cumsum(pivcols, axis=1) - 1
    bs, cols = np.nonzero(pivcols)
    vals = (PRIME - rref[bs, rows_of[bs, cols], free[bs]]) % PRIME
    x[bs, cols] = vals
    return x


def _normalize(x: np.ndarray) -> np.ndarray:
    first = np.argmax(x != 0, axis=1)
    lead = x[np.arange(x.shape[0]), first]
    return x * _inv_mod(lead)[:, None] % PRIME


def classify_batch(mats: np.ndarray, want_inter: bool = False) -> dict:
    """Nut-class flags for a batch of adjacency matrices.

    Input is a (B, n, n) 0/1 array.  Output arrays (length B):
      nullity; dextro, laevo, bi (exact); ambi_candidate (superset of the
      true ambi set; confirm candidates with the exact classifier);
      inter (exact, only when want_inter).

    The order-1 exclusion is not applied here; callers never classify n=1.
    """
    bsize, n, _ = mats.shape
    _assert_rigorous(mats)
    work = mats.astype(np.int64, copy=True)
    rank, pivcols = rref_mod(work)
    nullity = n - rank
    dextro = np.zeros(bsize, dtype=bool)
    laevo = np.zeros(bsize, dtype=bool)
    ambi_candidate = np.zeros(bsize, dtype=bool)
    sel1 = np.nonzero(nullity == 1)[0]
    if sel1.size:
        x = _kernel_vectors_nullity1(work[sel1], pivcols[sel1])
        ker_full = (x != 0).all(axis=1)
        dextro[sel1] = ker_full
        tsel = sel1[ker_full]
        if tsel.size:
            tw = mats[tsel].transpose(0, 2, 1).astype(np.int64, copy=True)
            trank, tpiv = rref_mod(tw)
            assert (trank == n - 1).all()
            y = _kernel_vectors_nullity1(tw, tpiv)
            coker_full = (y != 0).all(axis=1)
            laevo[tsel] = coker_full
            both = tsel[coker_full]
            if both.size:
                xs = _normalize(x[ker_full][coker_full])
                ys = _normalize(y[coker_full])
                ambi_candidate[both] = (xs == ys).all(axis=1)
        # laevo-not-dextro instances are not flagged; census tables only
        # report the dextro count (the laevo total equals it by reversal)
    bi = dextro & laevo
    out = {"nullity": nullity, "dextro": dextro, "laevo": laevo, "bi": bi,
           "ambi_candidate": ambi_candidate}
    if want_inter:
        inter = np.zeros(bsize, dtype=bool)
        sing = np.nonzero(nullity >= 1)[0]
        if sing.size:
            stacked = np.concatenate(
                [mats[sing], mats[sing].transpose(0, 2, 1)], axis=1
            ).astype(np.int64, copy=True)
            _assert_rigorous(stacked)
            srank, spiv = rref_mod(stacked)
            idim = n - srank
            one = np.nonzero(idim == 1)[0]
            if one.size:
                vec = _kernel_vectors_nullity1(stacked[one], spiv[one])
                inter[sing[one]] = (vec != 0).all(axis=1)
        out["inter"] = inter
    return out

"""Exact linear algebra: row reduction over F_p and integer rank."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np


def rref_mod_p(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p.  Returns (nonzero rows, pivot columns)."""
    m = np.array(mat, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_mod_p(mat, p: int) -> int:
    return len(rref_mod_p(mat, p)[1])


def nullspace_mod_p(mat, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : mat @ x = 0 mod p}."""
    mat = np.asarray(mat, dtype=np.int64)
    if ncols is None:
        ncols = mat.shape[1]
    if mat.size == 0:
        return np.eye(ncols, dtype=np.int64)
    red, pivots = rref_mod_p(mat, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in zip(red, pivots):
            basis[i, pc] = -row[f] % p
    return basis


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [[int(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[c]
        for i in range(rank + 1, len(m)):
            row = m[i]
            f = row[c]
            if f == 0:
                m[i] = [x * pv // prev for x in row] if pv != prev else row
                continue
            m[i] = [(pv * x - f * y) // prev for x, y in zip(row, pr)]
        prev = pv
        rank += 1
        if rank == len(m):
            break
    return rank


# Prime below 2**20: a panel of PANEL products of residues sums exactly in float64.
CERTIFICATE_PRIME = 1_048_573
PANEL = 64


def _panel_lu(panel: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """In-place LU with row pivoting of an (m, w) panel over F_p.

    Returns the row permutation and the panel columns holding pivots.  Below
    each pivot the column stores the multipliers.
    """
    m, w = panel.shape
    perm = np.arange(m)
    pivots: list[int] = []
    r = 0
    for c in range(w):
        if r == m:
            break
        nz = np.flatnonzero(panel[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            panel[[r, piv]] = panel[[piv, r]]
            perm[[r, piv]] = perm[[piv, r]]
        mult = np.mod(panel[r + 1:, c] * pow(int(panel[r, c]), -1, p), p)
        rest = panel[r + 1:, c + 1:]
        rest -= np.mod(np.outer(mult, panel[r, c + 1:]), p)
        np.mod(rest, p, out=rest)
        panel[r + 1:, c] = mult
        pivots.append(c)
        r += 1
    return perm, pivots


def rank_mod_prime(mat, p: int = CERTIFICATE_PRIME) -> int:
    """Rank over F_p of an integer matrix, by blocked elimination in float64.

    rank mod p never exceeds the rational rank, so a full-rank result here
    certifies full rational rank.
    """
    if (p - 1) ** 2 * PANEL >= 2**53:
        raise ValueError("prime too large for exact float64 panel updates")
    a = np.mod(np.array(mat, dtype=np.int64), p).astype(np.float64)
    rows, cols = a.shape
    r = 0
    for c in range(0, cols, PANEL):
        if r == rows:
            break
        w = min(PANEL, cols - c)
        panel = a[r:, c:c + w]
        perm, pivots = _panel_lu(panel, p)
        pr = len(pivots)
        if pr == 0:
            continue
        trail = a[r:, c + w:]
        trail[:] = trail[perm]
        lower = panel[:, pivots]
        # U12 = L11^{-1} A12 by forward substitution
        for i in range(1, pr):
            row = trail[i]
            row -= lower[i, :i] @ trail[:i]
            np.mod(row, p, out=row)
        below = trail[pr:]
        below -= lower[pr:] @ trail[:pr]
        np.mod(below, p, out=below)
        r += pr
    return r

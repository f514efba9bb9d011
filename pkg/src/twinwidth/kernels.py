"""Bitmask kernels for the exact search.

A trigraph on at most 64 slots is held as two ``uint64`` arrays: ``black[i]``
and ``red[i]`` are the neighbour masks of slot ``i``. Both kernels exist in a
numba-compiled form and a vectorised numpy form. Set
``TWINWIDTH_PURE_NUMPY=1`` to force the numpy path.
"""
from __future__ import annotations

import os

import numpy as np

MAX_SLOTS = 64

_ONE = np.uint64(1)
_ZERO = np.uint64(0)


def _want_numba() -> bool:
    flag = os.environ.get("TWINWIDTH_PURE_NUMPY", "").strip().lower()
    return flag in ("", "0", "false", "no")


try:  # pragma: no cover - exercised implicitly depending on the environment
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _want_numba()


# ---------------------------------------------------------------- numpy path
def pair_scores_numpy(black, red, extra, alive, pi, pj):
    """Max red degree of the trigraph after contracting each pair ``(pi[k], pj[k])``."""
    if pi.size == 0:
        return np.empty(0, np.int64)
    ui = pi.astype(np.uint64)
    uj = pj.astype(np.uint64)
    both = (_ONE << ui) | (_ONE << uj)
    nb = black[pi] & black[pj] & ~both
    nr = (black[pi] | red[pi] | black[pj] | red[pj]) & ~both & ~nb
    z = np.bitwise_count(nr).astype(np.int64)
    ua = alive.astype(np.uint64)
    others = np.bitwise_count(red[alive][None, :] & ~both[:, None]).astype(np.int64)
    others += extra[alive][None, :]
    others += ((nr[:, None] >> ua[None, :]) & _ONE).astype(np.int64)
    clash = (alive[None, :] == pi[:, None]) | (alive[None, :] == pj[:, None])
    others[clash] = 0
    return np.maximum(z, others.max(axis=1))


def contract_numpy(black, red, i, j):
    """Contract slot ``j`` into slot ``i``; returns new arrays (inputs untouched)."""
    slots = np.arange(black.size, dtype=np.uint64)
    both = (_ONE << np.uint64(i)) | (_ONE << np.uint64(j))
    nb = black[i] & black[j] & ~both
    nr = (black[i] | red[i] | black[j] | red[j]) & ~both & ~nb
    b = black & ~both
    r = red & ~both
    b |= ((nb >> slots) & _ONE) << np.uint64(i)
    r |= ((nr >> slots) & _ONE) << np.uint64(i)
    b[i] = nb
    r[i] = nr
    b[j] = _ZERO
    r[j] = _ZERO
    return b, r


# ---------------------------------------------------------------- numba path
if HAVE_NUMBA:

    @njit(cache=True)
    def _popcount(x):
        x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
        x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
        x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
        return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))

    @njit(cache=True)
    def pair_scores_numba(black, red, extra, alive, pi, pj):
        npairs = pi.shape[0]
        out = np.empty(npairs, np.int64)
        one = np.uint64(1)
        for k in range(npairs):
            i = pi[k]
            j = pj[k]
            both = (one << np.uint64(i)) | (one << np.uint64(j))
            nb = black[i] & black[j] & ~both
            nr = (black[i] | red[i] | black[j] | red[j]) & ~both & ~nb
            best = _popcount(nr)
            for t in range(alive.shape[0]):
                w = alive[t]
                if w == i or w == j:
                    continue
                d = _popcount(red[w] & ~both) + extra[w]
                if (nr >> np.uint64(w)) & one:
                    d += 1
                if d > best:
                    best = d
            out[k] = best
        return out

    @njit(cache=True)
    def contract_numba(black, red, i, j):
        one = np.uint64(1)
        both = (one << np.uint64(i)) | (one << np.uint64(j))
        nb = black[i] & black[j] & ~both
        nr = (black[i] | red[i] | black[j] | red[j]) & ~both & ~nb
        b = black & ~both
        r = red & ~both
        bi = one << np.uint64(i)
        for w in range(b.shape[0]):
            if (nb >> np.uint64(w)) & one:
                b[w] |= bi
            if (nr >> np.uint64(w)) & one:
                r[w] |= bi
        b[i] = nb
        r[i] = nr
        b[j] = np.uint64(0)
        r[j] = np.uint64(0)
        return b, r


def pair_scores(black, red, extra, alive, pi, pj):
    if USE_NUMBA:
        return pair_scores_numba(black, red, extra, alive, pi, pj)
    return pair_scores_numpy(black, red, extra, alive, pi, pj)


def contract(black, red, i, j):
    if USE_NUMBA:
        return contract_numba(black, red, np.int64(i), np.int64(j))
    return contract_numpy(black, red, i, j)


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"

"""Numpy implementations of the hot scan kernels.

These are the fallback used when the compiled extension (pentr._core) is
unavailable. Both backends expose the same functions with identical
semantics and deterministic witness order (ascending index tuples).

All tables index algebra elements by their own mask value: entry i of a
scan *is* the mask i, and `size` is always 2^(2^n).
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def closure_fixpoint(seeds: np.ndarray, ls: np.ndarray, rs: np.ndarray, full: int) -> np.ndarray:
    """Constraint-firing fixpoint for a batch of seed masks.

    Repeatedly replaces m by m & r for every rule (l, r) with m ⊆ l and
    m ⊄ r, until no rule applies. Each rule fires at most once per seed
    (after firing, m stays below r), so the loop terminates.
    """
    m = np.asarray(seeds, dtype=np.uint32).copy()
    ls = np.asarray(ls, dtype=np.uint32)
    rs = np.asarray(rs, dtype=np.uint32)
    notl = np.uint32(full) & ~ls
    notr = np.uint32(full) & ~rs
    changed = True
    while changed:
        changed = False
        for i in range(len(ls)):
            fires = ((m & notl[i]) == 0) & ((m & notr[i]) != 0)
            if fires.any():
                m[fires] &= rs[i]
                changed = True
    return m


def stable_flags(size: int, ls: np.ndarray, rs: np.ndarray, full: int) -> np.ndarray:
    """Boolean flags over the whole algebra: True where no rule fires."""
    alg = np.arange(size, dtype=np.uint32)
    ok = np.ones(size, dtype=bool)
    for l, r in zip(np.asarray(ls, dtype=np.uint32), np.asarray(rs, dtype=np.uint32)):
        notl = np.uint32(full) & ~l
        notr = np.uint32(full) & ~r
        ok &= ((alg & notl) != 0) | ((alg & notr) == 0)
    return ok


def minimal_flags(cands: np.ndarray) -> np.ndarray:
    """Flags the subset-minimal masks among candidates.

    `cands` must be sorted by (popcount, value) ascending; members of one
    popcount layer cannot contain each other, so layers are independent.
    """
    cands = np.asarray(cands, dtype=np.uint32)
    flags = np.zeros(len(cands), dtype=bool)
    if len(cands) == 0:
        return flags
    pops = np.array([int(c).bit_count() for c in cands])
    minimals = np.empty(0, dtype=np.uint32)
    for pc in np.unique(pops):
        idx = np.flatnonzero(pops == pc)
        layer = cands[idx]
        if len(minimals):
            # contained[j] = some known minimal is a subset of layer[j]
            contained = np.zeros(len(layer), dtype=bool)
            chunk = max(1, (1 << 22) // max(1, len(layer)))
            for start in range(0, len(minimals), chunk):
                block = minimals[start:start + chunk]
                contained |= ((block[:, None] & ~layer[None, :]) == 0).any(axis=0)
            new = layer[~contained]
            flags[idx[~contained]] = True
        else:
            new = layer
            flags[idx] = True
        if len(new):
            minimals = np.concatenate([minimals, new])
    return flags


def transitivity_violations(leq: np.ndarray, cap: int) -> tuple[int, list[tuple[int, int, int]]]:
    """Counts triples (a,b,c) with a≤b, b≤c, a≰c; first `cap` in lex order."""
    leq = np.asarray(leq, dtype=bool)
    counts = np.asarray(leq, dtype=np.uint32) @ np.asarray(leq, dtype=np.uint32)
    total = int(counts[~leq].sum())
    witnesses: list[tuple[int, int, int]] = []
    if total:
        bad_rows = np.flatnonzero((counts * ~leq).any(axis=1))
        for a in bad_rows:
            for b in np.flatnonzero(leq[a]):
                for c in np.flatnonzero(leq[b] & ~leq[a]):
                    witnesses.append((int(a), int(b), int(c)))
                    if len(witnesses) >= cap:
                        return total, witnesses
    return total, witnesses


def conjunction_violations(leq: np.ndarray, cap: int) -> tuple[int, list[tuple[int, int, int]]]:
    """Counts triples (c,a,b) with c≤a, c≤b, c≰a∧b; first `cap` in lex order."""
    leq = np.asarray(leq, dtype=bool)
    size = leq.shape[0]
    total = 0
    witnesses: list[tuple[int, int, int]] = []
    for c in range(size):
        ups = np.flatnonzero(leq[c]).astype(np.uint32)
        if len(ups) == 0:
            continue
        meets = np.bitwise_and.outer(ups, ups)
        bad = ~leq[c][meets]
        n_bad = int(bad.sum())
        total += n_bad
        if n_bad and len(witnesses) < cap:
            for i, j in np.argwhere(bad):
                witnesses.append((c, int(ups[i]), int(ups[j])))
                if len(witnesses) >= cap:
                    break
    return total, witnesses


def wd_violations(leq: np.ndarray, cap: int) -> tuple[int, list[tuple[int, int, int]]]:
    """Weak-disjunction failures (a,b,g): a→b ≤ ¬a and a→g ≤ ¬a
    but a→(b∨g) ≰ ¬a. Lex-ascending witnesses, capped."""
    leq = np.asarray(leq, dtype=bool)
    size = leq.shape[0]
    full = size - 1
    alg = np.arange(size, dtype=np.uint32)
    total = 0
    witnesses: list[tuple[int, int, int]] = []
    for a in range(size):
        na = full & ~a
        arrows = np.uint32(na) | alg          # a -> x for every x
        good = leq[arrows, na]                # x with a->x <= !a
        bs = np.flatnonzero(good).astype(np.uint32)
        if len(bs) == 0:
            continue
        joins = np.bitwise_or.outer(bs, bs)
        bad = ~leq[np.uint32(na) | joins, na]
        n_bad = int(bad.sum())
        total += n_bad
        if n_bad and len(witnesses) < cap:
            for i, j in np.argwhere(bad):
                witnesses.append((a, int(bs[i]), int(bs[j])))
                if len(witnesses) >= cap:
                    break
    return total, witnesses


def splitting_violations(leq: np.ndarray, cap: int) -> tuple[int, list[tuple[int, int, int]]]:
    """Splitting failures (a,b,g): a∨¬b ≰ a and a∨g ≤ a but a∨b∨g ≰ a∨b."""
    leq = np.asarray(leq, dtype=bool)
    size = leq.shape[0]
    full = size - 1
    alg = np.arange(size, dtype=np.uint32)
    total = 0
    witnesses: list[tuple[int, int, int]] = []
    for a in range(size):
        a32 = np.uint32(a)
        good_g = leq[a32 | alg, a]            # g with a|g <= a
        for b in range(size):
            if leq[a | (full & ~b), a]:
                continue
            ab = a | b
            bad = good_g & ~leq[np.uint32(ab) | alg, ab]
            n_bad = int(bad.sum())
            total += n_bad
            if n_bad and len(witnesses) < cap:
                for g in np.flatnonzero(bad):
                    witnesses.append((a, b, int(g)))
                    if len(witnesses) >= cap:
                        break
    return total, witnesses

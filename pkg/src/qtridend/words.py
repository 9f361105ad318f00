"""Words on positive integers: standardization, parking, enumeration.

A word is a plain tuple of ints >= 1.  Positions are 1-based in every
function that takes position sets, matching the usual combinatorial
conventions; the empty word is the empty tuple and is never a basis object.

Families enumerated here:
  * surjections ST_n: words of length n whose letter set is exactly
    {1..max} (packed words),
  * parking functions PF_n: words whose increasing rearrangement u
    satisfies u(i) <= i,
  * non-decreasing parking functions NDPF_n: non-decreasing words with
    f(i) <= i (counted by the Catalan numbers).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

Word = tuple[int, ...]


def std(w: Word) -> Word:
    """Standardize: relabel the letter set onto {1..k} preserving order."""
    rank = {v: i + 1 for i, v in enumerate(sorted(set(w)))}
    return tuple(rank[v] for v in w)


@lru_cache(maxsize=None)
def park(w: Word) -> Word:
    """Parkization: the parking function with the same relative order.

    Stable-sorts the letters, applies the recursion p(1) = 1,
    p(j) = min(p(j-1) + u(j) - u(j-1), j) on the sorted word u, then
    puts the values back in the original positions.  Fixes parking
    functions pointwise and preserves std.
    """
    n = len(w)
    order = sorted(range(n), key=lambda i: (w[i], i))
    out = [0] * n
    prev_v = prev_p = 0
    for j, i in enumerate(order, start=1):
        v = w[i]
        p = 1 if j == 1 else min(prev_p + v - prev_v, j)
        out[i] = p
        prev_v, prev_p = v, p
    return tuple(out)


def is_parking(w: Word) -> bool:
    return all(1 <= v <= i for i, v in enumerate(sorted(w), start=1))


def is_surjection(w: Word) -> bool:
    """True when the letter set is exactly {1..max(w)}."""
    if not w:
        return False
    return set(w) == set(range(1, max(w) + 1))


def is_ndpf(w: Word) -> bool:
    return all(w[i] <= w[i + 1] for i in range(len(w) - 1)) and all(
        v <= i for i, v in enumerate(w, start=1)
    )


@lru_cache(maxsize=None)
def surjections(n: int) -> tuple[Word, ...]:
    """All surjective words of length n, in lexicographic order.

    Grows position by position, tracking the number of holes (values
    below the running max not used yet); a prefix survives iff the
    remaining positions can still fill every hole.
    """
    if n == 0:
        return ((),)
    out: list[Word] = []
    used: set[int] = set()

    def grow(prefix: list[int], top: int, holes: int):
        k = n - len(prefix)
        if k == 0:
            out.append(tuple(prefix))
            return
        for v in range(1, top + k - holes + 1):
            if v <= top:
                h2 = holes - (0 if v in used else 1)
                t2 = top
            else:
                h2 = holes + (v - top - 1)
                t2 = v
            if h2 > k - 1:
                continue
            fresh = v not in used
            if fresh:
                used.add(v)
            prefix.append(v)
            grow(prefix, t2, h2)
            prefix.pop()
            if fresh:
                used.remove(v)
    grow([], 0, 0)
    return tuple(out)


@lru_cache(maxsize=None)
def parking_functions(n: int) -> tuple[Word, ...]:
    """All parking functions of length n, in lexicographic order."""
    return tuple(
        w for w in itertools.product(range(1, n + 1), repeat=n) if is_parking(w)
    )


@lru_cache(maxsize=None)
def ndpf(n: int) -> tuple[Word, ...]:
    if n == 0:
        return ((),)
    out: list[Word] = []

    def grow(prefix: list[int]):
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 1
        for v in range(lo, i + 2):
            prefix.append(v)
            grow(prefix)
            prefix.pop()

    grow([])
    return tuple(out)


def corestrict(w: Word, values) -> Word:
    """Subword of the letters whose value lies in `values` (order kept)."""
    vs = set(values)
    return tuple(v for v in w if v in vs)


def restrict(w: Word, positions) -> Word:
    """Subword at the given 1-based positions (order kept)."""
    ps = set(positions)
    return tuple(v for i, v in enumerate(w, start=1) if i in ps)


def image_overlap(h: Word, k: Word) -> int:
    return len(set(h) & set(k))


def shuffles(*parts: int) -> list[Word]:
    """All (n1,...,nr)-shuffles as permutations of [n1+...+nr].

    sigma is increasing on each consecutive block of the composition;
    returned in one-line notation (sigma(1), ..., sigma(n)).
    """
    if not parts or any(p < 1 for p in parts):
        raise ValueError("composition of positive parts required")
    n = sum(parts)
    starts = []
    acc = 1
    for p in parts:
        starts.append(acc)
        acc += p
    out = []

    def grow(sigma, counts):
        if len(sigma) == n:
            out.append(tuple(sigma))
            return
        for b, p in enumerate(parts):
            if counts[b] < p:
                sigma.append(starts[b] + counts[b])
                counts[b] += 1
                grow(sigma, counts)
                counts[b] -= 1
                sigma.pop()

    grow([], [0] * len(parts))
    return out


def inverse_perm(sigma: Word) -> Word:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma, start=1):
        inv[v - 1] = i
    return tuple(inv)


def run_compress(w: Word) -> Word:
    """Drop each letter equal to its left neighbour."""
    return tuple(v for i, v in enumerate(w) if i == 0 or w[i - 1] != v)

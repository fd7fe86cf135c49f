"""Integer partitions as plain tuples, plus signed straightening of integer sequences.

A partition is a weakly decreasing tuple of positive ints; () is the empty
partition.  The convention lam[k] = 0 for k >= len(lam) is realized by
`part()`, never by stored trailing zeros.
"""

from collections import namedtuple


def is_partition(seq):
    return all(seq[k] >= seq[k + 1] for k in range(len(seq) - 1)) and (
        not seq or seq[-1] > 0
    )


def make(seq):
    """Normalize an iterable into a partition tuple (strips trailing zeros)."""
    parts = list(seq)
    while parts and parts[-1] == 0:
        parts.pop()
    lam = tuple(parts)
    if not is_partition(lam):
        raise ValueError(f"not weakly decreasing positive: {seq!r}")
    return lam


def part(lam, k):
    """k-th part (1-based), 0 beyond the length."""
    return lam[k - 1] if 1 <= k <= len(lam) else 0


def weight(lam):
    return sum(lam)


def conjugate(lam):
    if not lam:
        return ()
    cols = [0] * lam[0]
    for p in lam:
        for j in range(p):
            cols[j] += 1
    return tuple(cols)


def contains(lam, mu):
    """mu ⊂ lam, with parts beyond the length taken as 0."""
    if len(mu) > len(lam):
        return False
    return all(mu[k] <= lam[k] for k in range(len(mu)))


def block(n, k):
    """The block partition (n^k)."""
    return (n,) * k if n > 0 else ()


def complement(lam, n, k):
    """Complement of lam inside the block (n^k)."""
    if not contains(block(n, k), lam):
        raise ValueError(f"{lam} is not contained in the block ({n}^{k})")
    return make(n - part(lam, k + 1 - j) for j in range(1, k + 1))


def add(lam, mu):
    """Pointwise sum; always a partition when both inputs are."""
    m = max(len(lam), len(mu))
    return make(part(lam, k) + part(mu, k) for k in range(1, m + 1))


def concat(lam, mu):
    """Concatenation (lam, mu); requires the result to be weakly decreasing."""
    if lam and mu and mu[0] > lam[-1]:
        raise ValueError(f"concatenation of {lam} and {mu} is not a partition")
    return lam + mu


def sort_key(lam):
    """Canonical order: graded, then reverse-lexicographic within a degree."""
    return (sum(lam), tuple(-p for p in lam))


def format_partition(lam):
    return "(" + ",".join(str(p) for p in lam) + ")"


def parse_partition(text):
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"bad partition literal: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return ()
    return make(int(tok) for tok in body.split(","))


def partitions_of(w, max_part=None, max_len=None):
    """All partitions of weight w with the given bounds, in lex-descending order."""
    if max_part is None:
        max_part = w
    if max_len is None:
        max_len = w

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(w, max_part, max_len)


def partitions_in_box(max_part, max_len):
    """All partitions contained in the block (max_part^max_len)."""
    def rec(cap, slots):
        yield ()
        if slots == 0:
            return
        for first in range(cap, 0, -1):
            for rest in rec(first, slots - 1):
                yield (first,) + rest

    yield from rec(max_part, max_len)


def subpartitions(lam, max_len=None):
    """All mu ⊂ lam (optionally with l(mu) ≤ max_len)."""
    n = len(lam) if max_len is None else min(len(lam), max_len)

    def rec(k, cap):
        yield ()
        if k > n:
            return
        for first in range(min(cap, lam[k - 1]), 0, -1):
            for rest in rec(k + 1, first):
                yield (first,) + rest

    yield from rec(1, lam[0] if lam else 0)


SignedIndex = namedtuple("SignedIndex", ["sign", "partition"])


def straighten(seq):
    """Resolve det[s_{a_k - k + l}] for an arbitrary integer sequence a.

    Returns SignedIndex(eps, mu) with det = eps * s_mu; eps = 0 when the
    determinant vanishes.  Uses the adjacent exchange
    (..., a, b, ...) -> -(..., b-1, a+1, ...) run to a fixed point.
    """
    a = list(seq)
    m = len(a)
    sign = 1
    fuel = m * m + 1
    changed = True
    while changed:
        if fuel < 0:
            raise AssertionError(f"straighten exceeded fuel on {seq!r}")
        fuel -= 1
        changed = False
        for k in range(m - 1):
            x, y = a[k], a[k + 1]
            if x >= y:
                continue
            if y == x + 1:
                return SignedIndex(0, ())
            a[k], a[k + 1] = y - 1, x + 1
            sign = -sign
            changed = True
    if a and a[-1] < 0:
        return SignedIndex(0, ())
    while a and a[-1] == 0:
        a.pop()
    return SignedIndex(sign, tuple(a))

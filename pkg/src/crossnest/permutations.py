"""Permutations of {1..n}: statistics, patterns, classes, decompositions.

A permutation is a tuple of the integers 1..n in one-line notation, so
``(4, 6, 2, 9, 8, 1, 7, 3, 10, 5)`` maps 1 to 4, 2 to 6, and so on.  The
empty tuple is the (unique) permutation of the empty set.  Indices and
values are 1-based throughout; position i holds ``word[i - 1]``.

Statistics follow the crossing/nesting conventions for the diagram that
draws an arc from i to word[i]:

* a pair i < j crosses   when i < j < word[i] < word[j]
                         or word[i] < word[j] <= i < j,
* a pair i < j nests     when i < j < word[j] < word[i]
                         or word[j] < word[i] <= i < j.

Inversions, excedances, descents and fixed points are the usual ones, and
``inv = exc + crs + 2 * nes`` holds for every permutation.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence


def is_permutation_word(word: Sequence[int]) -> bool:
    """True when ``word`` lists each of 1..n exactly once.

    >>> is_permutation_word((2, 1, 3))
    True
    >>> is_permutation_word((1, 1))
    False
    """
    n = len(word)
    seen = [False] * (n + 1)
    for v in word:
        if not isinstance(v, int) or not 1 <= v <= n or seen[v]:
            return False
        seen[v] = True
    return True


def check_permutation(word: Sequence[int]) -> tuple[int, ...]:
    """Validate and return the word as a tuple; raise ValueError otherwise."""
    w = tuple(word)
    if not is_permutation_word(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse one-line notation, values separated by whitespace.

    >>> parse_permutation("3 1 2")
    (3, 1, 2)
    >>> parse_permutation("")
    ()
    """
    fields = text.split()
    try:
        values = tuple(int(f) for f in fields)
    except ValueError:
        raise ValueError(f"not a permutation word: {text!r}") from None
    return check_permutation(values)


def one_line(word: Sequence[int]) -> str:
    """One-line notation as text, the inverse of ``parse_permutation``."""
    return " ".join(str(v) for v in word)


def cycle_string(word: Sequence[int]) -> str:
    """Cycle notation with cycles by smallest element, fixed points shown.

    >>> cycle_string((2, 1, 3))
    '(1 2)(3)'
    >>> cycle_string(())
    '()'
    """
    w = check_permutation(word)
    n = len(w)
    if n == 0:
        return "()"
    seen = [False] * (n + 1)
    parts = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        nxt = w[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = w[nxt - 1]
        parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts)


def is_involution(word: Sequence[int]) -> bool:
    """True when the permutation is its own inverse.

    >>> is_involution((2, 1, 3))
    True
    >>> is_involution((2, 3, 1))
    False
    """
    w = check_permutation(word)
    return all(w[w[i] - 1] == i + 1 for i in range(len(w)))


@dataclass(frozen=True)
class StatRecord:
    """Statistics of one permutation."""

    exc: int
    fp: int
    crs: int
    nes: int
    inv: int
    exc_set: tuple[int, ...]
    des_set: tuple[int, ...]
    is_involution: bool


def _crs_nes_inv(w: tuple[int, ...]) -> tuple[int, int, int]:
    crs = nes = inv = 0
    n = len(w)
    for i in range(1, n + 1):
        si = w[i - 1]
        for j in range(i + 1, n + 1):
            sj = w[j - 1]
            if si > sj:
                inv += 1
            if (j < si < sj) or (si < sj <= i):
                crs += 1
            elif (j < sj < si) or (sj < si <= i):
                nes += 1
    return crs, nes, inv


def perm_statistics(word: Sequence[int]) -> StatRecord:
    """All statistics of a permutation in one pass.

    >>> r = perm_statistics((3, 2, 1))
    >>> (r.exc, r.fp, r.crs, r.nes, r.inv)
    (1, 1, 0, 1, 3)
    """
    w = check_permutation(word)
    n = len(w)
    crs, nes, inv = _crs_nes_inv(w)
    exc_set = tuple(i for i in range(1, n + 1) if w[i - 1] > i)
    des_set = tuple(i for i in range(1, n) if w[i - 1] > w[i])
    fp = sum(1 for i in range(1, n + 1) if w[i - 1] == i)
    return StatRecord(
        exc=len(exc_set),
        fp=fp,
        crs=crs,
        nes=nes,
        inv=inv,
        exc_set=exc_set,
        des_set=des_set,
        is_involution=all(w[w[i] - 1] == i + 1 for i in range(n)),
    )


def contains_classical(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """Classical pattern containment by order-isomorphic subsequence.

    >>> contains_classical((2, 1, 4, 3), (2, 1, 4, 3))
    True
    >>> contains_classical((1, 2, 3), (2, 1))
    False
    """
    w = check_permutation(word)
    p = check_permutation(pattern)
    if not p:
        raise ValueError("pattern must be nonempty")
    n, k = len(w), len(p)
    if k > n:
        return False

    def extend(start: int, chosen: tuple[int, ...]) -> bool:
        m = len(chosen)
        if m == k:
            return True
        for pos in range(start, n - (k - m) + 1):
            v = w[pos]
            if all((v > c) == (p[m] > p[t]) for t, c in enumerate(chosen)):
                if extend(pos + 1, chosen + (v,)):
                    return True
        return False

    return extend(0, ())


def contains_321(word: Sequence[int]) -> bool:
    """Containment of 321 in linear time (agrees with contains_classical)."""
    w = tuple(word)
    n = len(w)
    if n < 3:
        return False
    suffix_min = [0] * (n + 1)
    suffix_min[n] = n + 1
    for j in range(n - 1, -1, -1):
        suffix_min[j] = min(suffix_min[j + 1], w[j])
    prefix_max = 0
    for j in range(1, n - 1):
        if w[j - 1] > prefix_max:
            prefix_max = w[j - 1]
        if prefix_max > w[j] > suffix_min[j + 1]:
            return True
    return False


def contains_4321(word: Sequence[int]) -> bool:
    """True when some decreasing subsequence has length four."""
    # best[j] is the largest last element over decreasing subsequences of
    # length j seen so far; a larger last element is always easier to extend.
    b1 = b2 = b3 = 0
    for v in word:
        if b3 > v:
            return True
        if b2 > v:
            if v > b3:
                b3 = v
        elif b1 > v:
            if v > b2:
                b2 = v
        if v > b1:
            b1 = v
    return False


def contains_3412(word: Sequence[int]) -> bool:
    """Containment of 3412 in quadratic time."""
    w = tuple(word)
    n = len(w)
    if n < 4:
        return False
    # ascent_top[m]: the largest value playing the "3" in an ascent that
    # lies entirely inside the first m letters (0 when there is none).
    ascent_top = [0] * (n + 1)
    for m in range(2, n + 1):
        v = w[m - 1]
        best_below = 0
        for t in range(m - 1):
            if w[t] < v and w[t] > best_below:
                best_below = w[t]
        ascent_top[m] = max(ascent_top[m - 1], best_below)
    for p3 in range(1, n + 1):
        top = ascent_top[p3 - 1]
        if not top:
            continue
        v3 = w[p3 - 1]
        for p4 in range(p3 + 1, n + 1):
            if v3 < w[p4 - 1] < top:
                return True
    return False


def avoids_barred_3142(word: Sequence[int]) -> bool:
    """Avoidance of the barred pattern built on 3142 with the 1 barred.

    A permutation fails exactly when it contains an occurrence of 231 (as
    positions i < j < k with word[k] < word[i] < word[j]) that cannot be
    completed to 3142 by a letter below word[k] strictly between i and j.

    >>> avoids_barred_3142((2, 3, 1))
    False
    >>> avoids_barred_3142((3, 1, 2))
    True
    """
    w = tuple(word)
    n = len(w)
    if n < 3:
        return True
    suffix_min = [n + 1] * (n + 2)
    for j in range(n, 0, -1):
        suffix_min[j] = min(suffix_min[j + 1], w[j - 1])
    for i in range(1, n - 1):
        vi = w[i - 1]
        interior_min = n + 1
        for j in range(i + 1, n):
            if j > i + 1:
                interior_min = min(interior_min, w[j - 2])
            vj = w[j - 1]
            if vi < vj:
                tail = suffix_min[j + 1]
                # A 231 with first two positions (i, j) exists iff some
                # later value sits below vi; it is completable only by an
                # interior value below that later value, and the smallest
                # later value is the binding witness.
                if tail < vi and tail <= interior_min:
                    return False
    return True


class PermClass(enum.Enum):
    """Enumerable permutation families."""

    ALL = "all"
    INVOLUTIONS = "involutions"
    I4321 = "I4321"
    I3412 = "I3412"
    S321_B3142 = "S321B3142"

    @classmethod
    def from_name(cls, name: str) -> "PermClass":
        for member in cls:
            if member.value == name:
                return member
        known = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown class {name!r} (known: {known})")


def _involutions_lex(n: int) -> Iterator[tuple[int, ...]]:
    word = [0] * n
    assigned = [False] * n

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        i = start
        while i < n and assigned[i]:
            i += 1
        if i == n:
            yield tuple(word)
            return
        assigned[i] = True
        word[i] = i + 1
        yield from rec(i + 1)
        for j in range(i + 1, n):
            if not assigned[j]:
                assigned[j] = True
                word[i], word[j] = j + 1, i + 1
                yield from rec(i + 1)
                assigned[j] = False
        assigned[i] = False

    return rec(0)


def enumerate_class(n: int, cls: PermClass) -> Iterator[tuple[int, ...]]:
    """Yield the family's members of size n in lexicographic order.

    >>> list(enumerate_class(3, PermClass.S321_B3142))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 1, 2)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if cls is PermClass.ALL:
        yield from itertools.permutations(range(1, n + 1))
    elif cls is PermClass.INVOLUTIONS:
        yield from _involutions_lex(n)
    elif cls is PermClass.I4321:
        for w in _involutions_lex(n):
            if not contains_4321(w):
                yield w
    elif cls is PermClass.I3412:
        for w in _involutions_lex(n):
            if not contains_3412(w):
                yield w
    elif cls is PermClass.S321_B3142:
        for w in itertools.permutations(range(1, n + 1)):
            if not contains_321(w) and avoids_barred_3142(w):
                yield w
    else:  # pragma: no cover
        raise ValueError(f"unknown class {cls!r}")


def in_class(word: Sequence[int], cls: PermClass) -> bool:
    """Membership test matching ``enumerate_class``."""
    w = check_permutation(word)
    if cls is PermClass.ALL:
        return True
    if cls is PermClass.INVOLUTIONS:
        return is_involution(w)
    if cls is PermClass.I4321:
        return is_involution(w) and not contains_4321(w)
    if cls is PermClass.I3412:
        return is_involution(w) and not contains_3412(w)
    if cls is PermClass.S321_B3142:
        return not contains_321(w) and avoids_barred_3142(w)
    raise ValueError(f"unknown class {cls!r}")  # pragma: no cover


def head_tail_pairs(word: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Head/tail pairs of the canonical reduced decomposition.

    Repeatedly take the largest value v still sitting left of its home
    position v, slide it there, and record the pair (v - 1, position it
    left).  Pairs come back sorted by ascending head.

    >>> head_tail_pairs((3, 2, 1))
    ((1, 1), (2, 1))
    >>> head_tail_pairs((1, 2, 3))
    ()
    """
    w = list(check_permutation(word))
    pairs = []
    while True:
        best_v = 0
        best_i = -1
        for i, v in enumerate(w):
            if v > i + 1 and v > best_v:
                best_v, best_i = v, i
        if not best_v:
            break
        w.pop(best_i)
        w.insert(best_v - 1, best_v)
        pairs.append((best_v - 1, best_i + 1))
    return tuple(reversed(pairs))


def permutation_from_head_tail(
    pairs: Sequence[tuple[int, int]], n: int
) -> tuple[int, ...]:
    """Rebuild the permutation with the given head/tail pairs.

    Each pair (h, t) contributes the adjacent transpositions s_h s_{h-1}
    ... s_t; blocks are applied to the identity in ascending head order,
    each s_i swapping positions i and i + 1 of the word built so far.

    >>> permutation_from_head_tail(((1, 1), (2, 1)), 3)
    (3, 2, 1)
    >>> permutation_from_head_tail((), 4)
    (1, 2, 3, 4)
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev_head = 0
    for h, t in pairs:
        if not 1 <= t <= h <= n - 1:
            raise ValueError(f"pair ({h}, {t}) needs 1 <= tail <= head <= {n - 1}")
        if h <= prev_head:
            raise ValueError("heads must be strictly increasing")
        prev_head = h
    w = list(range(1, n + 1))
    for h, t in pairs:
        for i in range(h, t - 1, -1):
            w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)

"""Bijections between Motzkin paths and pattern-restricted permutations.

Three maps send a Motzkin path of length n to a permutation of the same
size, each turning step-height statistics into arc statistics:

* ``phi1`` pairs the k-th up step with the k-th down step and reads the
  pairs as 2-cycles; it lands in the 4321-avoiding involutions and carries
  (hor, up, 2*sh_u, sh_h) to (fp, exc, crs, nes).
* ``phi2`` pairs each up step with the down step closing its tunnel; it
  lands in the 3412-avoiding involutions, kills all crossings, and carries
  2*sh_u + sh_h to nes.
* ``phi3`` reads the strip decomposition as head/tail pairs and rebuilds
  the permutation with those pairs; it lands in the 321-avoiding
  permutations that also avoid the barred pattern, with
  (exc, crs) = (up, sh_u + sh_h) and inv = area - sh_u.

``involution_shape_path`` inverts both phi1 and phi2 (they share it),
``phi3_inverse`` inverts phi3.
"""

from __future__ import annotations

from typing import Sequence

from .paths import (
    check_path,
    path_from_head_tail,
    sequential_matching,
    strip_decomposition,
    tunnel_matching,
)
from .permutations import (
    PermClass,
    check_permutation,
    head_tail_pairs,
    in_class,
    is_involution,
    permutation_from_head_tail,
)


def _involution_from_pairs(
    n: int, pairs: Sequence[tuple[int, int]]
) -> tuple[int, ...]:
    word = list(range(1, n + 1))
    for a, b in pairs:
        word[a - 1], word[b - 1] = b, a
    return tuple(word)


def phi1(word: str, *, check: bool = False) -> tuple[int, ...]:
    """Involution whose 2-cycles are the sequential matching of the path.

    >>> phi1("uhd")
    (3, 2, 1)
    """
    w = check_path(word)
    result = _involution_from_pairs(len(w), sequential_matching(w))
    if check and not in_class(result, PermClass.I4321):
        raise AssertionError(f"phi1 image left its class: {result}")
    return result


def phi2(word: str, *, check: bool = False) -> tuple[int, ...]:
    """Involution whose 2-cycles are the tunnel matching of the path.

    >>> phi2("uudd")
    (4, 3, 2, 1)
    """
    w = check_path(word)
    result = _involution_from_pairs(len(w), tunnel_matching(w))
    if check and not in_class(result, PermClass.I3412):
        raise AssertionError(f"phi2 image left its class: {result}")
    return result


def involution_shape_path(word: Sequence[int]) -> str:
    """Shared inverse of phi1 and phi2.

    Reads off one letter per position: 'u' where the involution goes up
    (word[i] > i), 'h' on fixed points, 'd' where it comes down.

    >>> involution_shape_path((3, 2, 1))
    'uhd'
    """
    w = check_permutation(word)
    if not is_involution(w):
        raise ValueError(f"not an involution: {w}")
    letters = []
    for i, v in enumerate(w, start=1):
        letters.append("u" if v > i else "h" if v == i else "d")
    return check_path("".join(letters))


def phi3(word: str, *, check: bool = False) -> tuple[int, ...]:
    """Permutation built from the path's strip decomposition.

    >>> phi3("ud")
    (2, 1)
    """
    w = check_path(word)
    result = permutation_from_head_tail(strip_decomposition(w), len(w))
    if check and not in_class(result, PermClass.S321_B3142):
        raise AssertionError(f"phi3 image left its class: {result}")
    return result


def phi3_inverse(word: Sequence[int]) -> str:
    """Path whose strips encode the permutation's head/tail pairs.

    The permutation must avoid 321 and the barred pattern.

    >>> phi3_inverse((2, 1))
    'ud'
    """
    w = check_permutation(word)
    if not in_class(w, PermClass.S321_B3142):
        raise ValueError(f"permutation is outside the 321/barred class: {w}")
    return path_from_head_tail(head_tail_pairs(w), len(w))

"""Motzkin numbers, their q-analogues, and Stieltjes-type tableaux.

Two q-analogues are built from the same product recurrence, differing only
in the exponent placed on the product term:

* ``q_motzkin``:        M_n = M_{n-1} + sum_{k=0}^{n-2} q^k     M_k M_{n-2-k}
* ``q_motzkin_tilde``:  M~_n = M~_{n-1} + sum_{k=0}^{n-2} q^e(k) M~_k M~_{n-2-k}
  with e(k) = k + 1, except e(n-2) = 0.

Setting q = 1 in either recovers the Motzkin numbers.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .polynomials import UNI_ONE, UniPoly

_motzkin_cache: list[int] = [1, 1]
_q_motzkin_cache: list[UniPoly] = [UNI_ONE, UNI_ONE]
_q_tilde_cache: list[UniPoly] = [UNI_ONE, UNI_ONE]


def motzkin_number(n: int) -> int:
    """n-th Motzkin number.

    >>> [motzkin_number(n) for n in range(10)]
    [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_motzkin_cache) <= n:
        m = len(_motzkin_cache)
        total = _motzkin_cache[m - 1]
        for k in range(m - 1):
            total += _motzkin_cache[k] * _motzkin_cache[m - 2 - k]
        _motzkin_cache.append(total)
    return _motzkin_cache[n]


def q_motzkin(n: int) -> UniPoly:
    """q-Motzkin polynomial of the first kind.

    >>> str(q_motzkin(4))
    '5 + 2*q + 2*q^2'
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_q_motzkin_cache) <= n:
        m = len(_q_motzkin_cache)
        total = _q_motzkin_cache[m - 1]
        for k in range(m - 1):
            prod = _q_motzkin_cache[k] * _q_motzkin_cache[m - 2 - k]
            total = total + prod.times_q_power(k)
        _q_motzkin_cache.append(total)
    return _q_motzkin_cache[n]


def q_motzkin_tilde(n: int) -> UniPoly:
    """q-Motzkin polynomial of the second kind.

    >>> str(q_motzkin_tilde(4))
    '5 + 3*q + q^2'
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_q_tilde_cache) <= n:
        m = len(_q_tilde_cache)
        total = _q_tilde_cache[m - 1]
        for k in range(m - 1):
            exp = 0 if k == m - 2 else k + 1
            prod = _q_tilde_cache[k] * _q_tilde_cache[m - 2 - k]
            total = total + prod.times_q_power(exp)
        _q_tilde_cache.append(total)
    return _q_tilde_cache[n]


LevelSeq = Callable[[int], "UniPoly | int"]


def _as_poly(value: "UniPoly | int") -> UniPoly:
    return value if isinstance(value, UniPoly) else UniPoly((value,))


def stieltjes_tableau(
    alpha: LevelSeq, beta: LevelSeq, n_max: int
) -> list[list[UniPoly]]:
    """Triangular tableau driven by level sequences alpha and beta.

    Row n has entries i = 0..n with h[0][0] = 1 and

        h[n][i] = beta(i) * h[n-1][i-1]
                  + alpha(i+1) * h[n-1][i]
                  + h[n-1][i+1]

    where entries outside 0 <= i <= n-1 in row n-1 count as zero; alpha and
    beta are only consulted for level >= 1.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rows: list[list[UniPoly]] = [[UNI_ONE]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row: list[UniPoly] = []
        for i in range(n + 1):
            acc = UniPoly(())
            if i >= 1:
                acc = acc + _as_poly(beta(i)) * prev[i - 1]
            if i <= n - 1:
                acc = acc + _as_poly(alpha(i + 1)) * prev[i]
            if i + 1 <= n - 1:
                acc = acc + prev[i + 1]
            row.append(acc)
        rows.append(row)
    return rows


def h_tableau(n_max: int) -> list[list[UniPoly]]:
    """Tableau with alpha(i) = beta(i) = q^(i-1).

    Its first column reproduces ``q_motzkin_tilde``:

    >>> str(h_tableau(4)[4][0])
    '5 + 3*q + q^2'
    """

    def level(i: int) -> UniPoly:
        return UniPoly.q_power(i - 1)

    return stieltjes_tableau(level, level, n_max)


def h_recursion_rhs(n: int, i: int, table: Sequence[Sequence[UniPoly]]) -> UniPoly:
    """Closed-form right side for entry (n, i) of the ``h_tableau``.

        q^(i-1) * ( h[n-1][i-1]
                    + sum_{k=i-1}^{n-2} q^(1+k) h[k][i-1] h[n-1-k][0] )

    Requires 1 <= i <= n and a table computed at least to row n.
    """
    if not 1 <= i <= n:
        raise ValueError("need 1 <= i <= n")
    if len(table) <= n:
        raise ValueError(f"table only has rows up to {len(table) - 1}, need {n}")
    acc = table[n - 1][i - 1] if i - 1 <= n - 1 else UniPoly(())
    for k in range(i - 1, n - 1):
        prod = table[k][i - 1] * table[n - 1 - k][0]
        acc = acc + prod.times_q_power(1 + k)
    return acc.times_q_power(i - 1)

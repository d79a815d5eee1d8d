"""Exact integer polynomials.

Two representations are used throughout the package:

* ``UniPoly``, a dense polynomial in the single variable ``q`` with integer
  coefficients, stored as a tuple of coefficients in ascending degree with
  no trailing zeros.
* ``MultiPoly``, a sparse polynomial in a fixed ordered tuple of variables,
  stored as a dict from packed exponent keys to nonzero integer
  coefficients.

Both render to a canonical text form: terms ascending by total exponent
(ties broken by the exponent tuple), a coefficient of 1 and an exponent of
1 are suppressed, and the zero polynomial renders as ``"0"``.

>>> str(UniPoly((5, 3, 1)))
'5 + 3*q + q^2'
>>> str(UniPoly(()))
'0'
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

# Exponents are packed into a single int key, _EXP_BITS bits per variable.
# Keys of same-shape monomials add under multiplication with no carries as
# long as every exponent stays below 2**_EXP_BITS, which is far beyond any
# degree reached here; _pack checks the bound anyway.
_EXP_BITS = 21
_EXP_MASK = (1 << _EXP_BITS) - 1

# Products of dense coefficient lists switch to single-bigint packing above
# this size*size threshold; below it schoolbook wins on constant factors.
_KARA_CUTOFF = 256


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product of two dense coefficient lists (ascending degree).

    When both operands are nonnegative the product is computed by packing
    each list into one big integer, fixed-width slots in little-endian
    order, and multiplying once.  Slot width is chosen from the bound
    max(a)*max(b)*min(len(a),len(b)) on any output coefficient, so slots
    cannot overflow into their neighbours and the result is exact.  Mixed
    signs fall back to the schoolbook loop.
    """
    if not a or not b:
        return []
    la, lb = len(a), len(b)
    if la * lb <= _KARA_CUTOFF or min(a) < 0 or min(b) < 0:
        out = [0] * (la + lb - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    bound = max(a) * max(b) * min(la, lb) + 1
    slot = (bound.bit_length() + 7) // 8
    packed_a = int.from_bytes(
        b"".join(x.to_bytes(slot, "little") for x in a), "little"
    )
    packed_b = int.from_bytes(
        b"".join(y.to_bytes(slot, "little") for y in b), "little"
    )
    raw = (packed_a * packed_b).to_bytes(slot * (la + lb), "little")
    return [
        int.from_bytes(raw[k * slot : (k + 1) * slot], "little")
        for k in range(la + lb - 1)
    ]


def _format_terms(terms: Iterable[tuple[int, Sequence[tuple[str, int]]]]) -> str:
    """Render (coefficient, [(var, exponent), ...]) terms canonically."""
    pieces: list[str] = []
    for coeff, exps in terms:
        if coeff == 0:
            continue
        mag = abs(coeff)
        factors = [v if e == 1 else f"{v}^{e}" for v, e in exps if e]
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not pieces:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append((" - " if coeff < 0 else " + ") + body)
    return "".join(pieces) if pieces else "0"


class UniPoly:
    """Dense integer polynomial in ``q``.

    >>> p = UniPoly((1, 2)) * UniPoly((0, 1))
    >>> str(p)
    'q + 2*q^2'
    >>> p.evaluate(1)
    3
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def const(cls, c: int) -> "UniPoly":
        return cls((c,))

    @classmethod
    def q_power(cls, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * k + (1,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def times_q_power(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        if not self.coeffs:
            return self
        return UniPoly((0,) * k + self.coeffs)

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "UniPoly":
        return UniPoly((other,)) + (-self)

    def __mul__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            return UniPoly(tuple(other * c for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return UniPoly(_convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        return _format_terms((c, (("q", e),)) for e, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({self.coeffs!r})"


UNI_ZERO = UniPoly(())
UNI_ONE = UniPoly((1,))
UNI_Q = UniPoly((0, 1))


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _EXP_MASK:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (_EXP_BITS * i)
    return key


def _unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (_EXP_BITS * i)) & _EXP_MASK for i in range(nvars))


class MultiPoly:
    """Sparse integer polynomial in a fixed ordered tuple of variables.

    >>> x = MultiPoly.variable(("x", "y"), "x")
    >>> y = MultiPoly.variable(("x", "y"), "y")
    >>> str(x * x + 2 * y)
    '2*y + x^2'
    """

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[int, int] | None = None):
        object.__setattr__(self, "variables", tuple(variables))
        object.__setattr__(
            self, "_terms", {k: c for k, c in (terms or {}).items() if c}
        )

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c: int) -> "MultiPoly":
        return cls(variables, {0: c})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        return cls.monomial(variables, {name: 1})

    @classmethod
    def monomial(
        cls,
        variables: Sequence[str],
        exps: Mapping[str, int],
        coeff: int = 1,
    ) -> "MultiPoly":
        variables = tuple(variables)
        unknown = set(exps) - set(variables)
        if unknown:
            raise ValueError(f"unknown variables: {sorted(unknown)}")
        vec = [exps.get(v, 0) for v in variables]
        return cls(variables, {_pack(vec): coeff})

    @classmethod
    def from_terms(
        cls,
        variables: Sequence[str],
        terms: Mapping[tuple[int, ...], int],
    ) -> "MultiPoly":
        variables = tuple(variables)
        data: dict[int, int] = {}
        for exps, c in terms.items():
            if len(exps) != len(variables):
                raise ValueError("exponent tuple length does not match variables")
            data[_pack(exps)] = data.get(_pack(exps), 0) + c
        return cls(variables, data)

    @classmethod
    def from_unipoly(
        cls, p: UniPoly, variables: Sequence[str], var: str = "q"
    ) -> "MultiPoly":
        variables = tuple(variables)
        i = variables.index(var)
        return cls(
            variables,
            {e << (_EXP_BITS * i): c for e, c in enumerate(p.coeffs) if c},
        )

    def is_zero(self) -> bool:
        return not self._terms

    def terms_sorted(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms as (exponent tuple, coefficient), canonical order."""
        n = len(self.variables)
        out = [(_unpack(k, n), c) for k, c in self._terms.items()]
        out.sort(key=lambda t: (sum(t[0]), t[0]))
        return out

    def coefficient(self, exps: Mapping[str, int]) -> int:
        vec = [exps.get(v, 0) for v in self.variables]
        return self._terms.get(_pack(vec), 0)

    def _check_same(self, other: "MultiPoly") -> None:
        if self.variables != other.variables:
            raise ValueError(
                f"variable mismatch: {self.variables} vs {other.variables}"
            )

    def _coerce(self, other: "MultiPoly | int") -> "MultiPoly | None":
        if isinstance(other, int):
            return MultiPoly.constant(self.variables, other)
        if isinstance(other, MultiPoly):
            self._check_same(other)
            return other
        return None

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        data = dict(self._terms)
        for k, c in rhs._terms.items():
            data[k] = data.get(k, 0) + c
        return MultiPoly(self.variables, data)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: int) -> "MultiPoly":
        return MultiPoly.constant(self.variables, other) + (-self)

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly(
                self.variables, {k: other * c for k, c in self._terms.items()}
            )
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if len(self.variables) <= 1:
            return self._mul_dense(rhs)
        data: dict[int, int] = {}
        for ka, ca in self._terms.items():
            for kb, cb in rhs._terms.items():
                k = ka + kb
                data[k] = data.get(k, 0) + ca * cb
        return MultiPoly(self.variables, data)

    __rmul__ = __mul__

    def _mul_dense(self, other: "MultiPoly") -> "MultiPoly":
        # Single-variable products go through the dense fast path.
        if not self._terms or not other._terms:
            return MultiPoly.zero(self.variables)
        da = max(self._terms)
        db = max(other._terms)
        a = [0] * (da + 1)
        for k, c in self._terms.items():
            a[k] = c
        b = [0] * (db + 1)
        for k, c in other._terms.items():
            b[k] = c
        out = _convolve(a, b)
        return MultiPoly(self.variables, {e: c for e, c in enumerate(out) if c})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        acc = MultiPoly.one(self.variables)
        for _ in range(n):
            acc = acc * self
        return acc

    def substitute(self, assignments: Mapping[str, int]) -> "MultiPoly":
        """Replace some variables by integers; the result keeps all variables."""
        unknown = set(assignments) - set(self.variables)
        if unknown:
            raise ValueError(f"unknown variables: {sorted(unknown)}")
        idx = {v: i for i, v in enumerate(self.variables)}
        n = len(self.variables)
        data: dict[int, int] = {}
        for k, c in self._terms.items():
            exps = list(_unpack(k, n))
            for v, val in assignments.items():
                i = idx[v]
                c *= val ** exps[i]
                exps[i] = 0
            key = _pack(exps)
            data[key] = data.get(key, 0) + c
        return MultiPoly(self.variables, data)

    def evaluate(self, assignments: Mapping[str, int]) -> int:
        """Evaluate with every variable assigned an integer."""
        missing = set(self.variables) - set(assignments)
        if missing:
            raise ValueError(f"missing assignments for: {sorted(missing)}")
        total = 0
        n = len(self.variables)
        for k, c in self._terms.items():
            exps = _unpack(k, n)
            for v, e in zip(self.variables, exps):
                if e:
                    c *= assignments[v] ** e
            total += c
        return total

    def as_unipoly(self, var: str = "q") -> UniPoly:
        """Project onto one variable; the others must not occur."""
        i = self.variables.index(var)
        n = len(self.variables)
        coeffs: dict[int, int] = {}
        for k, c in self._terms.items():
            exps = _unpack(k, n)
            if any(e for j, e in enumerate(exps) if j != i):
                raise ValueError(f"polynomial involves more than {var!r}")
            coeffs[exps[i]] = c
        if not coeffs:
            return UNI_ZERO
        out = [0] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            out[e] = c
        return UniPoly(out)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        n = len(self.variables)
        return max(sum(_unpack(k, n)) for k in self._terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.variables == other.variables
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.variables, tuple(sorted(self._terms.items()))))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return _format_terms(
            (c, tuple(zip(self.variables, exps)))
            for exps, c in self.terms_sorted()
        )

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables!r}, {str(self)!r})"


def _iter_terms(p: MultiPoly) -> Iterator[tuple[tuple[int, ...], int]]:
    return iter(p.terms_sorted())

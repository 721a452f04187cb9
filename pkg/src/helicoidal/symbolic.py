"""Exact symbolic arithmetic for the two expression classes used by the proofs.

``ParamPoly`` is a multivariate polynomial with rational coefficients in a fixed
set of named parameters.  ``SymExpr`` is either a polynomial in ``s`` (POLY mode)
or a finite combination ``sum_k A_k cosh(k u) + B_k sinh(k u)`` (HYP mode), with
``ParamPoly`` coefficients in both cases.

Monomials are packed into a single integer (12 bits per variable, first variable
most significant), so monomial multiplication is integer addition and sorting
the packed keys in decreasing order gives lexicographic term order.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

MAX_POLY_DEGREE = 12

VARIABLES: tuple[str, ...] = (
    "h", "H", "K", "r", "lambda", "mu", "c", "theta", "b",
) + tuple(f"a{i}" for i in range(MAX_POLY_DEGREE + 1))

_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
_BITS = 12
_MASK = (1 << _BITS) - 1
_MAX_EXP = 1 << (_BITS - 1)  # exponents must stay below the guard bit
_SHIFTS = tuple((_NVARS - 1 - i) * _BITS for i in range(_NVARS))
_GUARD = sum(1 << (sh + _BITS - 1) for sh in _SHIFTS)

Scalar = Union[int, Fraction]


def _q(x) -> Scalar:
    """Normalize an exact rational: integral values become ``int``."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _q(Fraction(x.numerator, x.denominator))
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def _pack(exps: Mapping[str, int]) -> int:
    key = 0
    for name, e in exps.items():
        if name not in _INDEX:
            raise ValueError(f"unknown parameter {name!r}")
        if not 0 <= e < _MAX_EXP:
            raise ValueError(f"exponent {e} out of range for {name}")
        key += e << _SHIFTS[_INDEX[name]]
    return key


def _unpack(key: int) -> dict[str, int]:
    out = {}
    for i, sh in enumerate(_SHIFTS):
        e = (key >> sh) & _MASK
        if e:
            out[VARIABLES[i]] = e
    return out


def _exp_of(key: int, idx: int) -> int:
    return (key >> _SHIFTS[idx]) & _MASK


def _key_divides(num: int, den: int) -> int | None:
    """Return ``num - den`` as a monomial key if ``den | num``, else None."""
    diff = (num | _GUARD) - den
    if diff & _GUARD != _GUARD:
        return None
    return diff - _GUARD


def _gcd_key(a: int, b: int) -> int:
    key = 0
    for sh in _SHIFTS:
        key += min((a >> sh) & _MASK, (b >> sh) & _MASK) << sh
    return key


def _mul_into(acc: dict, a: Mapping[int, Scalar], b: Mapping[int, Scalar]) -> None:
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            acc[k] = acc.get(k, 0) + ca * cb


def _clean(terms: dict) -> dict:
    return {k: _q(v) for k, v in terms.items() if v != 0}


class ParamPoly:
    """Polynomial over Q in the named parameters of ``VARIABLES``.

    Immutable.  Zero coefficients are never stored, so structural equality is
    mathematical equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None, *, _trusted: bool = False):
        if terms is None:
            terms = {}
        self._terms = dict(terms) if _trusted else _clean(dict(terms))
        self._hash = None

    # -- construction -----------------------------------------------------
    @classmethod
    def const(cls, value) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        v = _q(value)
        return cls({0: v} if v else {}, _trusted=True)

    @classmethod
    def var(cls, name: str) -> "ParamPoly":
        return cls({_pack({name: 1}): 1}, _trusted=True)

    @classmethod
    def vars(cls, names: str) -> tuple["ParamPoly", ...]:
        return tuple(cls.var(n) for n in names.split())

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1) -> "ParamPoly":
        return cls({_pack(exps): coeff})

    @classmethod
    def coerce(cls, value) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        return cls.const(value)

    # -- inspection -------------------------------------------------------
    def terms(self) -> list[tuple[dict[str, int], Scalar]]:
        """Terms in canonical (lexicographic, descending) order."""
        return [(_unpack(k), self._terms[k]) for k in sorted(self._terms, reverse=True)]

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(0, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def variables(self) -> set[str]:
        present = 0
        for k in self._terms:
            present |= k
        return {VARIABLES[i] for i, sh in enumerate(_SHIFTS) if (present >> sh) & _MASK}

    def degree(self, name: str) -> int:
        if not self._terms:
            return -1
        idx = _INDEX[name]
        return max(_exp_of(k, idx) for k in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(_unpack(k).values()) for k in self._terms)

    def coefficients_in(self, name: str) -> list["ParamPoly"]:
        """Coefficients ``[c_0, c_1, ...]`` with ``self = sum c_k name^k``."""
        idx = _INDEX[name]
        sh = _SHIFTS[idx]
        buckets: dict[int, dict] = {}
        for k, v in self._terms.items():
            e = (k >> sh) & _MASK
            buckets.setdefault(e, {})[k - (e << sh)] = v
        if not buckets:
            return []
        return [ParamPoly(buckets.get(e, {}), _trusted=True) for e in range(max(buckets) + 1)]

    def leading_term(self) -> tuple[dict[str, int], Scalar]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        k = max(self._terms)
        return _unpack(k), self._terms[k]

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, SymExpr):
            return NotImplemented
        other = ParamPoly.coerce(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return ParamPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly({k: -v for k, v in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        if isinstance(other, SymExpr):
            return NotImplemented
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other):
        return ParamPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, SymExpr):
            return NotImplemented
        if not isinstance(other, ParamPoly):
            c = _q(other)
            if c == 0:
                return ParamPoly()
            return ParamPoly({k: _q(v * c) for k, v in self._terms.items()}, _trusted=True)
        acc: dict = {}
        _mul_into(acc, self._terms, other._terms)
        return ParamPoly(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ParamPoly):
            return self.exact_div(other)
        c = _q(other)
        if c == 0:
            raise ZeroDivisionError("division of ParamPoly by zero")
        return self * (Fraction(1) / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ParamPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: other} if other != 0 else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- algebra helpers --------------------------------------------------
    def exact_div(self, other: "ParamPoly") -> "ParamPoly":
        """Quotient ``self / other``; raises ValueError when not exact."""
        other = ParamPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lk = max(other._terms)
        lc = other._terms[lk]
        rem = dict(self._terms)
        quot: dict = {}
        while rem:
            k = max(rem)
            qk = _key_divides(k, lk)
            if qk is None:
                raise ValueError("polynomial division is not exact")
            qc = _q(Fraction(rem[k]) / lc)
            quot[qk] = qc
            for ok, ov in other._terms.items():
                kk = qk + ok
                v = rem.get(kk, 0) - qc * ov
                if v == 0:
                    rem.pop(kk, None)
                else:
                    rem[kk] = v
        return ParamPoly(quot)

    def divides(self, other: "ParamPoly") -> bool:
        try:
            ParamPoly.coerce(other).exact_div(self)
        except ValueError:
            return False
        return True

    def content(self) -> tuple[Scalar, "ParamPoly", "ParamPoly"]:
        """Split into ``(rational, monomial, primitive)`` with positive leading coefficient."""
        if not self._terms:
            return 0, ParamPoly.const(1), ParamPoly()
        keys = list(self._terms)
        mono = keys[0]
        for k in keys[1:]:
            mono = _gcd_key(mono, k)
        nums = [Fraction(v).numerator for v in self._terms.values()]
        dens = [Fraction(v).denominator for v in self._terms.values()]
        g = 0
        for n in nums:
            g = math.gcd(g, n)
        lcm = 1
        for d in dens:
            lcm = lcm * d // math.gcd(lcm, d)
        rat = Fraction(g, lcm)
        if self._terms[max(keys)] < 0:
            rat = -rat
        prim = ParamPoly({k - mono: _q(v / rat) for k, v in self._terms.items()}, _trusted=True)
        return _q(rat), ParamPoly({mono: 1}, _trusted=True), prim

    def substitute(self, bindings: Mapping[str, object]) -> "ParamPoly":
        """Replace parameters by rationals or ParamPolys and recanonicalize."""
        for name in bindings:
            if name not in _INDEX:
                raise ValueError(f"unknown parameter {name!r}")
        if not bindings:
            return self
        subs = {_INDEX[n]: ParamPoly.coerce(v) for n, v in bindings.items()}
        powers: dict[tuple[int, int], ParamPoly] = {}
        acc: dict = {}
        for k, v in self._terms.items():
            rest = k
            factor = ParamPoly.const(v)
            for idx, val in subs.items():
                e = _exp_of(k, idx)
                if e:
                    rest -= e << _SHIFTS[idx]
                    p = powers.get((idx, e))
                    if p is None:
                        p = powers[(idx, e)] = val ** e
                    factor = factor * p
            for fk, fv in factor._terms.items():
                acc[fk + rest] = acc.get(fk + rest, 0) + fv
        return ParamPoly(acc)

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at numeric parameter values (exact for rationals)."""
        total = 0
        for k, v in self._terms.items():
            term = v
            for name, e in _unpack(k).items():
                if name not in values:
                    raise KeyError(f"no value for parameter {name!r}")
                term = term * values[name] ** e
            total = total + term
        return total

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.terms():
            mono = "*".join(f"{n}^{e}" if e > 1 else n for n, e in exps.items())
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if coeff < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"ParamPoly({self})"


def params(names: str) -> tuple[ParamPoly, ...]:
    """``h, r = params("h r")``."""
    return ParamPoly.vars(names)


class Mode(enum.Enum):
    POLY = "poly"
    HYP = "hyp"


def _trim(coeffs: Iterable[ParamPoly]) -> tuple[ParamPoly, ...]:
    out = list(coeffs)
    while out and out[-1].is_zero():
        out.pop()
    return tuple(out)


class LeadingTerm(NamedTuple):
    index: int
    coefficient: ParamPoly
    sinh_coefficient: ParamPoly | None = None


class SymExpr:
    """Polynomial in ``s`` or hyperbolic sum in ``u = s + theta``, ParamPoly coefficients.

    POLY mode stores ``coeffs[n]`` for ``s**n``.  HYP mode stores ``cosh[k]`` and
    ``sinh[k]`` for ``cosh(k u)`` and ``sinh(k u)``; ``sinh[0]`` is always zero.
    """

    __slots__ = ("mode", "_a", "_b")

    def __init__(self, mode: Mode, a: Iterable[ParamPoly] = (), b: Iterable[ParamPoly] = ()):
        self.mode = mode
        a = _trim(ParamPoly.coerce(x) for x in a)
        b = list(ParamPoly.coerce(x) for x in b)
        if mode is Mode.POLY:
            if b:
                raise ValueError("POLY mode has no sinh part")
            self._a, self._b = a, ()
        else:
            if b and not b[0].is_zero():
                raise ValueError("sinh(0 u) coefficient must be zero")
            self._a, self._b = a, _trim(b)

    # -- construction -----------------------------------------------------
    @classmethod
    def zero(cls, mode: Mode) -> "SymExpr":
        return cls(mode)

    @classmethod
    def constant(cls, value, mode: Mode = Mode.POLY) -> "SymExpr":
        return cls(mode, [ParamPoly.coerce(value)])

    @classmethod
    def poly(cls, coeffs: Iterable) -> "SymExpr":
        return cls(Mode.POLY, [ParamPoly.coerce(c) for c in coeffs])

    @classmethod
    def s(cls) -> "SymExpr":
        return cls(Mode.POLY, [ParamPoly(), ParamPoly.const(1)])

    @classmethod
    def cosh(cls, k: int = 1, coeff=1) -> "SymExpr":
        return cls(Mode.HYP, [ParamPoly()] * k + [ParamPoly.coerce(coeff)])

    @classmethod
    def sinh(cls, k: int = 1, coeff=1) -> "SymExpr":
        if k == 0:
            return cls(Mode.HYP)
        return cls(Mode.HYP, (), [ParamPoly()] * k + [ParamPoly.coerce(coeff)])

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> tuple[ParamPoly, ...]:
        if self.mode is not Mode.POLY:
            raise ValueError("coeffs is only defined in POLY mode")
        return self._a

    @property
    def cosh_coeffs(self) -> tuple[ParamPoly, ...]:
        self._need(Mode.HYP)
        return self._a

    @property
    def sinh_coeffs(self) -> tuple[ParamPoly, ...]:
        self._need(Mode.HYP)
        return self._b

    def coefficient(self, index: int, kind: str = "s") -> ParamPoly:
        """Coefficient at a basis element; ``kind`` is ``s``, ``cosh`` or ``sinh``."""
        seq = self._b if kind == "sinh" else self._a
        if (kind == "s") != (self.mode is Mode.POLY):
            raise ValueError(f"basis kind {kind!r} does not belong to {self.mode.value} mode")
        return seq[index] if 0 <= index < len(seq) else ParamPoly()

    def degree(self) -> int:
        return max(len(self._a), len(self._b)) - 1

    def is_zero(self) -> bool:
        return not self._a and not self._b

    def is_constant(self) -> bool:
        return len(self._a) <= 1 and not self._b

    def _need(self, mode: Mode) -> None:
        if self.mode is not mode:
            raise ValueError(f"operation requires {mode.value} mode")

    def basis_terms(self) -> list[tuple[int, str, ParamPoly]]:
        """Nonzero ``(index, kind, coefficient)`` triples, highest index first."""
        out = []
        if self.mode is Mode.POLY:
            for n in range(len(self._a) - 1, -1, -1):
                if not self._a[n].is_zero():
                    out.append((n, "s", self._a[n]))
            return out
        for k in range(self.degree(), -1, -1):
            for kind, seq in (("cosh", self._a), ("sinh", self._b)):
                if k < len(seq) and not seq[k].is_zero():
                    out.append((k, kind, seq[k]))
        return out

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "SymExpr":
        if isinstance(other, SymExpr):
            if other.mode is not self.mode:
                raise ValueError(f"mode mismatch: {self.mode.value} vs {other.mode.value}")
            return other
        return SymExpr.constant(other, self.mode)

    def __add__(self, other):
        other = self._coerce(other)
        return SymExpr(self.mode, _addseq(self._a, other._a), _addseq(self._b, other._b))

    __radd__ = __add__

    def __neg__(self):
        return SymExpr(self.mode, [-c for c in self._a], [-c for c in self._b])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, factor) -> "SymExpr":
        f = ParamPoly.coerce(factor)
        return SymExpr(self.mode, [c * f for c in self._a], [c * f for c in self._b])

    def __mul__(self, other):
        if not isinstance(other, SymExpr):
            return self.scale(other)
        other = self._coerce(other)
        if self.mode is Mode.POLY:
            return SymExpr(Mode.POLY, _convolve(self._a, other._a))
        return _hyp_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = SymExpr.constant(1, self.mode)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, SymExpr):
            return self.mode is other.mode and self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction, ParamPoly)):
            return self == SymExpr.constant(other, self.mode)
        return NotImplemented

    def __hash__(self):
        return hash((self.mode, self._a, self._b))

    def diff(self) -> "SymExpr":
        """Derivative with respect to ``s`` (``du/ds = 1`` in HYP mode)."""
        if self.mode is Mode.POLY:
            return SymExpr(Mode.POLY, [c * n for n, c in enumerate(self._a)][1:])
        cosh = [ParamPoly()] + [c * k for k, c in enumerate(self._b)][1:]
        sinh = [c * k for k, c in enumerate(self._a)]
        return SymExpr(Mode.HYP, cosh, sinh)

    def substitute(self, bindings: Mapping[str, object]) -> "SymExpr":
        return SymExpr(self.mode, [c.substitute(bindings) for c in self._a],
                       [c.substitute(bindings) for c in self._b])

    def map_coefficients(self, fn) -> "SymExpr":
        return SymExpr(self.mode, [fn(c) for c in self._a], [fn(c) for c in self._b])

    def evaluate(self, at, values: Mapping[str, object] | None = None):
        """Value at ``s = at`` (POLY) or ``u = at`` (HYP); parameters from ``values``."""
        values = values or {}
        if self.mode is Mode.POLY:
            total = 0
            for c in reversed(self._a):
                total = total * at + c.evaluate(values)
            return total
        u = float(at)
        total = 0.0
        for k, c in enumerate(self._a):
            if not c.is_zero():
                total += float(c.evaluate(values)) * math.cosh(k * u)
        for k, c in enumerate(self._b):
            if not c.is_zero():
                total += float(c.evaluate(values)) * math.sinh(k * u)
        return total

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        out = ""
        for idx, kind, c in self.basis_terms():
            if kind == "s":
                basis = "" if idx == 0 else ("s" if idx == 1 else f"s^{idx}")
            else:
                basis = "" if idx == 0 else f"{kind}({idx}*s)" if idx > 1 else f"{kind}(s)"
            text = str(c)
            if len(c) > 1:
                term = f"({text})*{basis}" if basis else f"({text})"
            elif not basis:
                term = text
            else:
                term = basis if text == "1" else "-" + basis if text == "-1" else f"{text}*{basis}"
            if not out:
                out = term
            elif term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def __repr__(self) -> str:
        return f"SymExpr[{self.mode.value}]({self})"


def _addseq(a, b):
    n = max(len(a), len(b))
    zero = ParamPoly()
    return [(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)]


def _convolve(a, b):
    if not a or not b:
        return []
    acc = [dict() for _ in range(len(a) + len(b) - 1)]
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            if not cb.is_zero():
                _mul_into(acc[i + j], ca._terms, cb._terms)
    return [ParamPoly(t) for t in acc]


def _hyp_mul(x: SymExpr, y: SymExpr) -> SymExpr:
    # product-to-sum:
    #   cosh a cosh b = (cosh(a+b) + cosh(a-b))/2
    #   sinh a sinh b = (cosh(a+b) - cosh(a-b))/2
    #   sinh a cosh b = (sinh(a+b) + sinh(a-b))/2
    n = x.degree() + y.degree() + 1
    ch = [dict() for _ in range(max(n, 1))]
    sh = [dict() for _ in range(max(n, 1))]
    half = Fraction(1, 2)

    def add(target, k, p, q, sign):
        acc = target[k]
        for kp, vp in p._terms.items():
            for kq, vq in q._terms.items():
                kk = kp + kq
                acc[kk] = acc.get(kk, 0) + sign * half * vp * vq

    for i, ci in enumerate(x._a):
        if ci.is_zero():
            continue
        for j, cj in enumerate(y._a):
            if not cj.is_zero():
                add(ch, i + j, ci, cj, 1)
                add(ch, abs(i - j), ci, cj, 1)
        for j, sj in enumerate(y._b):
            if not sj.is_zero():  # cosh(i) sinh(j)
                add(sh, i + j, ci, sj, 1)
                if j != i:
                    add(sh, abs(j - i), ci, sj, 1 if j > i else -1)
    for i, si in enumerate(x._b):
        if si.is_zero():
            continue
        for j, cj in enumerate(y._a):
            if not cj.is_zero():  # sinh(i) cosh(j)
                add(sh, i + j, si, cj, 1)
                if i != j:
                    add(sh, abs(i - j), si, cj, 1 if i > j else -1)
        for j, sj in enumerate(y._b):
            if not sj.is_zero():
                add(ch, i + j, si, sj, 1)
                add(ch, abs(i - j), si, sj, -1)
    sh[0] = {}
    return SymExpr(Mode.HYP, [ParamPoly(t) for t in ch], [ParamPoly(t) for t in sh])


class CoefficientSystem(NamedTuple):
    """Equations that must all vanish, one per nonzero basis coefficient."""

    equations: list[ParamPoly]
    provenance: list[tuple[int, str]]

    def __iter__(self) -> Iterator:  # type: ignore[override]
        return iter(zip(self.provenance, self.equations))

    def __len__(self) -> int:
        return len(self.equations)

    def get(self, index: int, kind: str = "s") -> ParamPoly:
        for prov, eq in zip(self.provenance, self.equations):
            if prov == (index, kind):
                return eq
        return ParamPoly()


# Module-level operation names.

def expr_add(a: SymExpr, b) -> SymExpr:
    return a + b


def expr_mul(a: SymExpr, b) -> SymExpr:
    return a * b


def expr_scale(a: SymExpr, factor) -> SymExpr:
    return a.scale(factor)


def expr_diff(a: SymExpr) -> SymExpr:
    return a.diff()


def extract_coefficients(a: SymExpr) -> CoefficientSystem:
    terms = a.basis_terms()
    return CoefficientSystem([c for _, _, c in terms], [(i, k) for i, k, _ in terms])


def leading_term(a: SymExpr) -> LeadingTerm:
    """Highest basis coefficient; HYP mode reports both cosh and sinh parts."""
    if a.is_zero():
        raise ValueError("no leading term")
    k = a.degree()
    if a.mode is Mode.POLY:
        return LeadingTerm(k, a.coeffs[k])
    return LeadingTerm(k, a.coefficient(k, "cosh"), a.coefficient(k, "sinh"))


def substitute_params(a, bindings: Mapping[str, object]):
    return a.substitute(bindings)

"""Exact case analysis of "all coefficients vanish" systems.

The search never guesses.  Each step either proves an equation cannot vanish
(a certificate), or splits the current branch into sub-branches that together
cover every real solution:

* a parameter dividing the equation: ``x = 0`` or ``x != 0``;
* a positive combination of even monomials: every pure power in it vanishes;
* a rational root ``x = q`` of the equation: ``x = q`` or ``x - q != 0``;
* a factor linear in an unknown ``x`` with a nonvanishing slope: ``x = -c0/c1``.

Anything else stops the branch as unresolved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .symbolic import Mode, ParamPoly, SymExpr

HSQ = "H^2"  # H enters only through H^2 in every condition

# order in which unknowns are solved for
UNKNOWN_ORDER = ("H^2", "K", "lambda", "mu", "theta", "b") + tuple(f"a{i}" for i in range(13))

MAX_DEPTH = 40


# -- rational bindings -------------------------------------------------------

@dataclass(frozen=True)
class RatFunc:
    num: ParamPoly
    den: ParamPoly = field(default_factory=lambda: ParamPoly.const(1))

    @classmethod
    def of(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, Fraction) and value.denominator != 1:
            return cls(ParamPoly.const(value.numerator), ParamPoly.const(value.denominator))
        return cls(ParamPoly.coerce(value))

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.of(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash(str(self))

    def normalized(self) -> "RatFunc":
        n, d = self.num, self.den
        if n.is_zero():
            return RatFunc(ParamPoly(), ParamPoly.const(1))
        rd, md, pd = d.content()
        rn, mn, pn = n.content()
        # cancel the common monomial
        common = _monomial_gcd(mn, md)
        mn, md = mn.exact_div(common), md.exact_div(common)
        if not pd.is_constant() and pd.divides(pn):
            pn, pd = pn.exact_div(pd), ParamPoly.const(1)
        scale = Fraction(rn) / Fraction(rd)
        return RatFunc(mn * pn * scale.numerator, md * pd * scale.denominator)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __str__(self) -> str:
        r = self.normalized()
        if r.den == 1:
            return str(r.num)
        num = str(r.num) if r.num.is_monomial() else f"({r.num})"
        den = str(r.den) if len(r.den.variables()) + (r.den.leading_term()[1] != 1) <= 1 and r.den.is_monomial() else f"({r.den})"
        return f"{num}/{den}"


def _monomial_gcd(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    ea, eb = a.leading_term()[0], b.leading_term()[0]
    return ParamPoly.monomial({n: min(e, eb[n]) for n, e in ea.items() if n in eb})


def _split_h(p: ParamPoly) -> list[ParamPoly] | None:
    """Coefficients of ``p`` as a polynomial in ``H^2``; None if odd powers of H occur."""
    cs = p.coefficients_in("H")
    if any(not c.is_zero() for c in cs[1::2]):
        return None
    return cs[0::2]


def poly_in(p: ParamPoly, name: str) -> list[ParamPoly] | None:
    if name == HSQ:
        return _split_h(p)
    return p.coefficients_in(name)


def bind_poly(p: ParamPoly, name: str, value: RatFunc, power: int | None = None) -> ParamPoly:
    """``den^power * p(name = num/den)``; ``power`` defaults to the degree in ``name``."""
    cs = poly_in(p, name)
    if cs is None:
        raise ValueError(f"{p} is not a polynomial in {name}")
    if not cs:
        return p
    deg = len(cs) - 1
    if power is None:
        power = deg
    if deg == 0:
        return p
    if value.den == 1:
        return _horner(cs, value.num) if name == HSQ else p.substitute({name: value.num})
    out = ParamPoly()
    npow = ParamPoly.const(1)
    for k, c in enumerate(cs):
        if not c.is_zero():
            out = out + c * npow * value.den ** (power - k)
        npow = npow * value.num
    return out


def _horner(cs: list[ParamPoly], x: ParamPoly) -> ParamPoly:
    out = ParamPoly()
    for c in reversed(cs):
        out = out * x + c
    return out


def bind_expr(e: SymExpr, name: str, value: RatFunc, *, even: bool = False) -> SymExpr:
    """Bind inside every coefficient with one common denominator power."""
    degs = [len(poly_in(c, name) or []) - 1 for _, _, c in e.basis_terms()]
    power = max(degs, default=0)
    if even and power % 2:
        power += 1
    return e.map_coefficients(lambda c: bind_poly(c, name, value, power) if not c.is_zero() else c)


# -- certificates ------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Proof that ``coefficient`` cannot vanish under ``nonzero_assumptions``.

    ``kind`` is ``unit`` (rational times a product of assumed-nonzero factors)
    or ``positive`` (additionally a definite sum of even monomials).
    """

    basis_index: int
    basis_kind: str
    coefficient: ParamPoly
    nonzero_assumptions: tuple[str, ...]
    kind: str

    def render(self) -> str:
        given = ", ".join(f"{a} ≠ 0" for a in self.nonzero_assumptions)
        label = "degree" if self.basis_kind == "s" else f"{self.basis_kind}"
        return f"{label} {self.basis_index}: coeff = {self.coefficient} ≠ 0 given {{{given}}}"


def _nonzero_vars(nonzero: Iterable[ParamPoly]) -> set[str]:
    out = set()
    for p in nonzero:
        if p.is_monomial() and p.total_degree() == 1:
            out |= p.variables()
    return out


def definite_even_sum(p: ParamPoly) -> int:
    """+1/-1 if every monomial has even exponents and all coefficients share a sign."""
    if p.is_zero():
        return 0
    sign = 0
    for exps, c in p.terms():
        if any(e % 2 for e in exps.values()):
            return 0
        s = 1 if c > 0 else -1
        if sign and s != sign:
            return 0
        sign = s
    return sign


def strip_nonzero(p: ParamPoly, nonzero: Iterable[ParamPoly]) -> tuple[Fraction, ParamPoly, ParamPoly]:
    """``p = rat * mono * rest`` with every assumed-nonzero factor moved out of ``rest``.

    ``mono`` collects the monomial content over variables not assumed nonzero.
    """
    nz = list(nonzero)
    nzv = _nonzero_vars(nz)
    rat, mono, prim = p.content()
    exps = mono.leading_term()[0] if not mono.is_zero() else {}
    free = {n: e for n, e in exps.items() if n not in nzv}
    changed = True
    while changed and not prim.is_constant():
        changed = False
        for q in nz:
            if q.is_constant() or (q.is_monomial() and q.total_degree() == 1):
                continue
            if q.divides(prim):
                prim = prim.exact_div(q)
                r2, m2, prim = prim.content()
                rat = rat * r2
                for n, e in (m2.leading_term()[0].items() if not m2.is_zero() else ()):
                    if n not in nzv:
                        free[n] = free.get(n, 0) + e
                changed = True
    return Fraction(rat), ParamPoly.monomial(free), prim


def certify(p: ParamPoly, nonzero: Iterable[ParamPoly]) -> str | None:
    """``unit``/``positive`` if ``p`` provably never vanishes, else None."""
    if p.is_zero():
        return None
    nz = list(nonzero)
    nzv = _nonzero_vars(nz)
    _, mono, rest = strip_nonzero(p, nz)
    if mono != 1:
        return None
    if rest.is_constant():
        return "unit"
    if definite_even_sum(rest):
        for exps, _ in rest.terms():
            if set(exps) <= nzv:
                return "positive"
    return None


# -- branches and outcomes ---------------------------------------------------

@dataclass
class SolutionFamily:
    bindings: dict[str, RatFunc]
    residual_conditions: list[str]
    surface_id: str | None = None

    def render(self) -> str:
        parts = [f"{k} = {v}" for k, v in self.bindings.items()] or ["(no constraint)"]
        if self.residual_conditions:
            parts.append("with " + ", ".join(self.residual_conditions))
        if self.surface_id:
            parts.append(f"[{self.surface_id}]")
        return "; ".join(parts)


@dataclass
class Closure:
    bindings: dict[str, RatFunc]
    reason: str
    certificate: Certificate | None = None


@dataclass
class Outcome:
    families: list[SolutionFamily] = field(default_factory=list)
    closures: list[Closure] = field(default_factory=list)
    unresolved: list[tuple[dict[str, RatFunc], list[str]]] = field(default_factory=list)


@dataclass
class _Branch:
    equations: list[tuple[tuple[int, str], ParamPoly]]
    W: SymExpr
    nonzero: list[ParamPoly]
    bindings: dict[str, RatFunc]
    added: list[ParamPoly]
    depth: int = 0


def _describe_nonzero(nonzero: Iterable[ParamPoly]) -> tuple[str, ...]:
    return tuple(sorted({str(q) for q in nonzero}))


def solve_system(
    equations: Iterable[tuple[tuple[int, str], ParamPoly] | ParamPoly],
    W: SymExpr,
    *,
    nonzero: Iterable[ParamPoly] = (),
    sigma: int | None = None,
    unknowns: Iterable[str] = UNKNOWN_ORDER,
) -> Outcome:
    """Enumerate all real solutions of ``equations`` with ``W`` nondegenerate.

    ``sigma`` (if given) is the required sign of ``W``; a branch where ``W``
    is a constant of the opposite definite sign is closed.
    """
    unknowns = [u for u in UNKNOWN_ORDER if u in set(unknowns)]
    eqs = [((i, "eq"), e) if isinstance(e, ParamPoly) else e for i, e in enumerate(equations)]
    out = Outcome()
    stack = [_Branch(eqs, W, list(nonzero), {}, [])]
    while stack:
        br = stack.pop()
        _step(br, sigma, unknowns, out, stack)
    return out


def _w_closure(W: SymExpr, sigma: int | None) -> str | None:
    if W.is_zero():
        return "W vanishes identically"
    if sigma is not None and W.is_constant():
        c = W.coefficient(0, "s" if W.mode is Mode.POLY else "cosh")
        sign = definite_even_sum(c)
        if sign and sign != sigma:
            return f"W = {c} has the wrong sign for this branch"
    return None


def _step(br: _Branch, sigma, unknowns, out: Outcome, stack: list) -> None:
    reason = _w_closure(br.W, sigma)
    if reason:
        out.closures.append(Closure(dict(br.bindings), reason))
        return
    eqs = [(prov, e) for prov, e in br.equations if not e.is_zero()]
    for prov, e in eqs:
        kind = certify(e, br.nonzero)
        if kind:
            cert = Certificate(prov[0], prov[1], e, _describe_nonzero(br.nonzero), kind)
            out.closures.append(Closure(dict(br.bindings), "certificate", cert))
            return
    if not eqs:
        out.families.append(SolutionFamily(dict(br.bindings), _residuals(br)))
        return
    if br.depth >= MAX_DEPTH:
        out.unresolved.append((dict(br.bindings), [str(e) for _, e in eqs]))
        return
    for _, e in eqs:
        deltas = split(e, br.nonzero, unknowns)
        if deltas is None:
            continue
        for binds, assume in deltas:
            child = _apply(br, binds, assume)
            if isinstance(child, Closure):
                out.closures.append(child)
            else:
                stack.append(child)
        return
    out.unresolved.append((dict(br.bindings), [str(e) for _, e in eqs]))


def _apply(br: _Branch, binds: list[tuple[str, RatFunc]], assume: list[ParamPoly]):
    eqs = list(br.equations)
    W = br.W
    nonzero = list(br.nonzero)
    bindings = dict(br.bindings)
    added = list(br.added)
    for name, value in binds:
        eqs = [(prov, bind_poly(e, name, value)) for prov, e in eqs]
        W = bind_expr(W, name, value, even=True)
        new_nz = []
        for q in nonzero:
            if poly_in(q, name) is None:
                q = q * q  # H != 0 iff H^2 != 0
            q2 = bind_poly(q, name, value)
            if q2.is_zero():
                return Closure(bindings | {name: value}, f"contradicts {q} != 0")
            if not q2.is_constant():
                new_nz.append(_primitive(q2))
        nonzero = new_nz
        added = [_primitive(bind_poly(q if poly_in(q, name) is not None else q * q, name, value)) for q in added]
        added = [q for q in added if not q.is_constant()]
        bindings = {k: _compose(v, name, value) for k, v in bindings.items()}
        bindings[name] = value.normalized()
    for q in assume:
        q = _primitive(q)
        if q not in nonzero:
            nonzero.append(q)
            added.append(q)
    return _Branch(eqs, W, nonzero, bindings, added, br.depth + 1)


def _primitive(q: ParamPoly) -> ParamPoly:
    rat, mono, prim = q.content()
    return mono * prim


def _compose(v: RatFunc, name: str, value: RatFunc) -> RatFunc:
    dn, dd = len(poly_in(v.num, name) or []) - 1, len(poly_in(v.den, name) or []) - 1
    power = max(dn, dd, 0)
    return RatFunc(bind_poly(v.num, name, value, power), bind_poly(v.den, name, value, power)).normalized()


def _residuals(br: _Branch) -> list[str]:
    out = [f"{q} != 0" for q in br.added]
    terms = [c for _, _, c in br.W.basis_terms()]
    if not terms:
        return out
    stripped = []
    for c in terms:
        _, mono, rest = strip_nonzero(c, br.nonzero)
        stripped.append(mono * rest)
    if any(s.is_constant() for s in stripped):
        return out
    base = min(stripped, key=len)
    if all(base.divides(s) for s in stripped):
        if base.is_monomial():
            base = ParamPoly.monomial({n: 1 for n in base.variables()})
        cond = f"{base} != 0"
        if cond not in out:
            out.append(cond)
    else:
        out.append(f"W = {br.W} not identically zero")
    return out


# -- splitting ---------------------------------------------------------------

def split(p: ParamPoly, nonzero: list[ParamPoly], unknowns: list[str]):
    """Cover ``p = 0`` by sub-branches ``(bindings, new nonzero factors)``, or None."""
    nzv = _nonzero_vars(nonzero)
    _, mono, rest = strip_nonzero(p, nonzero)
    if mono != 1:
        x = sorted(mono.variables(), key=lambda n: _order(n, unknowns))[0]
        if _order(x, unknowns) < len(unknowns):
            return [([(x, RatFunc.of(0))], []), ([], [ParamPoly.var(x)])]
        return None
    if rest.is_constant():
        return None
    rest = _drop_definite_factors(rest, nonzero)
    sign = definite_even_sum(rest)
    if sign:
        pure = sorted({n for exps, _ in rest.terms() if len(exps) == 1 for n in exps if n not in nzv},
                      key=lambda n: _order(n, unknowns))
        pure = [n for n in pure if _order(n, unknowns) < len(unknowns)]
        if pure:
            return [([(n, RatFunc.of(0)) for n in pure], [])]
    for x in unknowns:
        if x == HSQ:
            continue
        root = _rational_root(rest, x)
        if root is not None:
            lin = ParamPoly.var(x) - root
            return [([(x, RatFunc.of(root))], []), ([], [lin])]
    common = _common_factor(rest, unknowns)
    if common is not None:
        inner = split(common, nonzero, unknowns)
        if inner is not None:
            return inner + [([], [common])]
    for x in unknowns:
        cs = poly_in(rest, x)
        if cs is None or len(cs) != 2:
            continue
        c0, c1 = cs
        if certify(c1, nonzero):
            return [([(x, RatFunc(-c0, c1).normalized())], [])]
    found = _parameter_root(rest)
    if found is not None:
        x, value = found
        return [([(x, RatFunc(value))], []), ([], [ParamPoly.var(x) - value])]
    return None


def _parameter_root(p: ParamPoly) -> tuple[str, ParamPoly] | None:
    """A factor ``x - q*y`` of a binary form in any two parameters (e.g. ``h^2 - r^2``)."""
    names = sorted(p.variables())
    if len(names) == 1:
        root = _rational_root(p, names[0])
        return None if root is None else (names[0], ParamPoly.const(root))
    if len(names) != 2 or len({sum(e.values()) for e, _ in p.terms()}) != 1:
        return None
    for x, y in (names, names[::-1]):
        root = _rational_root(p.substitute({y: 1}), x)
        if root is not None:
            value = ParamPoly.var(y) * root
            if (ParamPoly.var(x) - value).divides(p):
                return x, value
    return None


def _order(name: str, unknowns: list[str]) -> int:
    return unknowns.index(name) if name in unknowns else len(unknowns)


def _drop_definite_factors(p: ParamPoly, nonzero) -> ParamPoly:
    """Divide out non-monomial factors that certify as nonvanishing."""
    for name in p.variables():
        for c in p.coefficients_in(name):
            if c.is_zero():
                continue
            _, _, g = c.content()
            if g.is_constant() or g == p:
                continue
            while g.divides(p) and certify(g, nonzero):
                p = p.exact_div(g)
                p = p.content()[2]
                if p.is_constant():
                    return p
    return p


def _common_factor(p: ParamPoly, unknowns: list[str]) -> ParamPoly | None:
    for x in unknowns:
        cs = poly_in(p, x)
        if not cs or len(cs) < 2:
            continue
        for c in cs:
            if c.is_zero():
                continue
            _, _, g = c.content()
            if g.is_constant() or g == p:
                continue
            if g.divides(p):
                return g
    return None


def _rational_root(p: ParamPoly, x: str) -> Fraction | None:
    cs = p.coefficients_in(x)
    if len(cs) < 2 or not all(c.is_constant() for c in cs):
        return None
    vals = [Fraction(c.constant_value()) for c in cs]
    # clear denominators
    lcm = 1
    for v in vals:
        lcm = lcm * v.denominator // _gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vals]
    a0 = next(i for i in ints if i != 0)
    lead = ints[-1]
    for pnum in _divisors(abs(a0)):
        for qden in _divisors(abs(lead)):
            for cand in (Fraction(pnum, qden), Fraction(-pnum, qden)):
                if sum(Fraction(c) * cand ** k for k, c in enumerate(ints)) == 0:
                    return cand
    return None


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0] if n else [1]


def substitute_family(e: SymExpr, bindings: Mapping[str, RatFunc]) -> SymExpr:
    """Apply bindings one at a time, clearing denominators."""
    for name, value in bindings.items():
        e = bind_expr(e, name, value)
    return e

"""Root location: exact real-root counts, integer roots, numeric complex roots.

Real-rootedness claims are certified by Sturm chains over exact rationals on
the squarefree part; zero roots come from the trailing-coefficient valuation,
never from numerics.  Complex roots are numeric only: Aberth-Ehrlich
simultaneous iteration applied per squarefree factor, so multiplicities are
exact (from Yun's decomposition) while positions carry a residual tolerance.
"""

from __future__ import annotations

import cmath
import json
from dataclasses import dataclass
from fractions import Fraction
from math import inf

from .polynomials import (IntPoly, RatPoly, rat_derivative, rat_divmod,
                          rat_evaluate, rat_from_int, rat_to_int)

DEFAULT_RESIDUAL_TOL = 1e-9
ABERTH_MAX_ITER = 400
_DIVISOR_CAP = 200000
_TRIAL_CAP = 10 ** 6


class ZeroPolynomialError(ValueError):
    """Root analysis of the zero polynomial is undefined."""


class RootFindingError(RuntimeError):
    """The numeric root iteration failed to converge; results are unusable."""


def _require_nonzero(p: IntPoly):
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial")


# -- exact squarefree machinery ------------------------------------------------

def _monic(p: RatPoly) -> RatPoly:
    if p.is_zero():
        return p
    lead = p.coeffs[-1]
    return RatPoly(tuple(c / lead for c in p.coeffs))


def rat_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic polynomial gcd over the rationals (Euclid)."""
    a, b = _monic(a), _monic(b)
    while not b.is_zero():
        _, r = rat_divmod(a, b)
        a, b = b, _monic(r)
    return a


def squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p') as a primitive integer polynomial (positive leading)."""
    _require_nonzero(p)
    rp = rat_from_int(p)
    g = rat_gcd(rp, rat_derivative(rp))
    if g.degree <= 0:
        q = rp
    else:
        q, _ = rat_divmod(rp, g)
    result = rat_to_int(q)
    if result.coeffs[-1] < 0:
        result = -result
    return result


def yun_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Squarefree decomposition [(q_i, i)] with p = c * prod q_i^i exactly."""
    _require_nonzero(p)
    if p.degree == 0:
        return []
    f = _monic(rat_from_int(p))
    df = rat_derivative(f)
    g = rat_gcd(f, df)
    if g.degree == 0:
        return [(rat_to_int(f), 1)]
    b, _ = rat_divmod(f, g)
    q, _ = rat_divmod(df, g)
    c = q - rat_derivative(b)
    out: list[tuple[IntPoly, int]] = []
    i = 1
    while b.degree > 0:
        a = rat_gcd(b, c)
        if a.degree > 0:
            out.append((rat_to_int(a), i))
            b, _ = rat_divmod(b, a)
            cq, _ = rat_divmod(c, a)
        else:
            cq = c
        c = cq - rat_derivative(b)
        i += 1
    return out


# -- Sturm chains --------------------------------------------------------------

def _positive_scale(p: RatPoly) -> RatPoly:
    """Divide by |leading coefficient|: sign pattern preserved, growth tamed."""
    if p.is_zero():
        return p
    lead = abs(p.coeffs[-1])
    return RatPoly(tuple(c / lead for c in p.coeffs))


def sturm_chain(p: IntPoly) -> list[RatPoly]:
    """Sturm chain of the squarefree part of p.

    Chain members are rescaled by positive constants only; anything else
    would corrupt the sign variation counts.
    """
    sf = rat_from_int(squarefree_part(p))
    chain = [sf, rat_derivative(sf)]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        _, r = rat_divmod(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(_positive_scale(-r))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sign_at(q: RatPoly, x) -> int:
    if q.is_zero():
        return 0
    if x == inf:
        c = q.coeffs[-1]
    elif x == -inf:
        c = q.coeffs[-1] * (-1) ** q.degree
    else:
        c = rat_evaluate(q, x)
    return (c > 0) - (c < 0)


def _variations(chain: list[RatPoly], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: IntPoly, interval: tuple) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b].

    Endpoints are exact rationals/ints or +-math.inf.
    """
    _require_nonzero(p)
    a, b = interval
    a = a if a == -inf else Fraction(a)
    b = b if b == inf else Fraction(b)
    if a != -inf and b != inf and a > b:
        raise ValueError("empty interval")
    chain = sturm_chain(p)
    return _variations(chain, a) - _variations(chain, b)


def count_distinct_real_roots(p: IntPoly) -> int:
    return sturm_count(p, (-inf, inf))


def is_real_rooted(p: IntPoly) -> bool:
    """True iff every complex root of p is real (constant polys vacuously)."""
    _require_nonzero(p)
    if p.degree == 0:
        return True
    sf = squarefree_part(p)
    return count_distinct_real_roots(p) == sf.degree


def sign_profile(p: IntPoly) -> tuple[int, int, int]:
    """Distinct real roots split as (negative, zero, positive) counts."""
    _require_nonzero(p)
    if p.degree == 0:
        return (0, 0, 0)
    zero = 1 if p.coeffs[0] == 0 else 0
    chain = sturm_chain(p)
    v_neg_inf = _variations(chain, -inf)
    v0 = _variations(chain, Fraction(0))
    v_inf = _variations(chain, inf)
    neg = (v_neg_inf - v0) - zero  # (-inf, 0] includes a zero root
    pos = v0 - v_inf
    return (neg, zero, pos)


# -- integer roots ---------------------------------------------------------------

def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n and f <= _TRIAL_CAP:
        for p in (f, f + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        if n > _TRIAL_CAP * _TRIAL_CAP:
            raise RootFindingError(
                f"cannot factor trailing coefficient remainder {n} "
                "for the integer-root divisor test")
        factors[n] = factors.get(n, 0) + 1
    return factors


def _divisors(n: int) -> list[int]:
    factors = _factorize(n)
    count = 1
    for e in factors.values():
        count *= e + 1
        if count > _DIVISOR_CAP:
            raise RootFindingError(
                "trailing coefficient has too many divisors for the "
                "integer-root search")
    divs = [1]
    for p, e in factors.items():
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def _divide_out_root(coeffs: list[int], r: int) -> list[int] | None:
    """Exact synthetic division by (X - r); None if r is not a root."""
    out = []
    acc = 0
    for c in reversed(coeffs):
        acc = acc * r + c
        out.append(acc)
    if out[-1] != 0:
        return None
    out.pop()
    return list(reversed(out))


def integer_roots(p: IntPoly) -> dict[int, int]:
    """All integer roots with multiplicities, by exact divisor testing.

    Divisors are taken from the trailing coefficient of the squarefree part,
    which keeps the candidate set small even when p itself has huge repeated
    factors; multiplicities come from repeated exact division of p.
    """
    _require_nonzero(p)
    roots: dict[int, int] = {}
    coeffs = list(p.coeffs)
    val = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        val += 1
    if val:
        roots[0] = val
    if len(coeffs) <= 1:
        return roots
    deflated = IntPoly(tuple(coeffs))
    sf = squarefree_part(deflated)
    trailing = abs(sf.coeffs[0])
    for d in _divisors(trailing):
        for r in (d, -d):
            work = _divide_out_root(list(deflated.coeffs), r)
            if work is None:
                continue
            mult = 1
            while True:
                nxt = _divide_out_root(work, r)
                if nxt is None:
                    break
                work = nxt
                mult += 1
            roots[r] = mult
    return roots


# -- numeric complex roots -------------------------------------------------------

def _float_coeffs(p: IntPoly) -> list[float]:
    scale = max(abs(c) for c in p.coeffs)
    return [float(Fraction(c, scale)) for c in p.coeffs]


def _horner2(coeffs: list[float], z: complex) -> tuple[complex, complex]:
    acc = 0j
    dacc = 0j
    for c in reversed(coeffs):
        dacc = dacc * z + acc
        acc = acc * z + c
    return acc, dacc


def _aberth(coeffs: list[float]) -> list[complex]:
    """Aberth-Ehrlich simultaneous iteration on a squarefree polynomial."""
    d = len(coeffs) - 1
    lead = coeffs[-1]
    radius = 1.0 + max(abs(c / lead) for c in coeffs[:-1]) if d else 1.0
    zs = [radius * 0.8 * cmath.exp(2j * cmath.pi * (k + 0.353) / d)
          for k in range(d)]
    for _ in range(ABERTH_MAX_ITER):
        max_step = 0.0
        for k in range(d):
            z = zs[k]
            pv, dv = _horner2(coeffs, z)
            if pv == 0:
                continue
            if dv == 0:
                zs[k] = z + 1e-8 * (1 + abs(z))
                max_step = inf
                continue
            w = pv / dv
            s = 0j
            for j in range(d):
                if j != k:
                    diff = z - zs[j]
                    if diff == 0:
                        diff = 1e-12
                    s += 1 / diff
            denom = 1 - w * s
            if denom == 0:
                step = w
            else:
                step = w / denom
            zs[k] = z - step
            rel = abs(step) / (1 + abs(zs[k]))
            if rel > max_step:
                max_step = rel
        if max_step < 1e-14:
            return zs
    raise RootFindingError(
        f"Aberth iteration did not converge in {ABERTH_MAX_ITER} steps")


def backward_error(p: IntPoly, z: complex) -> float:
    """|p(z)| / sum_i |c_i||z|^i: relative residual of z as a root of p."""
    norm = _float_coeffs(p)
    value = abs(_horner2(norm, z)[0])
    scale = sum(abs(c) * abs(z) ** i for i, c in enumerate(norm))
    return value / scale if scale else value


def complex_roots(p: IntPoly, tol: float = DEFAULT_RESIDUAL_TOL
                  ) -> list[tuple[complex, int]]:
    """Numeric roots with exact multiplicities, degree-many in total.

    Returns (root, multiplicity) pairs sorted by (real, imag).  Each root's
    backward error is verified against ``tol``; non-convergence raises
    instead of returning bad data.
    """
    _require_nonzero(p)
    if p.degree < 1:
        raise ValueError("complex_roots needs degree >= 1")
    found: list[tuple[complex, int]] = []
    coeffs = list(p.coeffs)
    val = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        val += 1
    if val:
        found.append((0j, val))
    deflated = IntPoly(tuple(coeffs))
    if deflated.degree >= 1:
        for factor, mult in yun_decomposition(deflated):
            if factor.degree < 1:
                continue
            for z in _aberth(_float_coeffs(factor)):
                residual = backward_error(p, z)
                if residual > tol:
                    raise RootFindingError(
                        f"root {z} has backward error {residual:.3e} > tol")
                found.append((z, mult))
    found.sort(key=lambda t: (t[0].real, t[0].imag))
    total = sum(m for _, m in found)
    assert total == p.degree, (total, p.degree)
    return found


def max_root_modulus(p: IntPoly, tol: float = DEFAULT_RESIDUAL_TOL) -> float:
    _require_nonzero(p)
    if p.degree < 1:
        return 0.0
    return max(abs(z) for z, _ in complex_roots(p, tol))


def rouche_bound(p: IntPoly) -> Fraction:
    """Exact disk radius 1 + max_(i<d) |h_i| / |h_d| containing all roots."""
    _require_nonzero(p)
    if p.degree == 0:
        return Fraction(1)
    lead = abs(p.coeffs[-1])
    rest = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + Fraction(rest, lead)


# -- aggregate report ------------------------------------------------------------

@dataclass(frozen=True)
class RootReport:
    degree: int
    negative_real: int
    zero_root: int
    positive_real: int
    real_rooted: bool
    integer_roots: dict[int, int]
    complex_roots: tuple[tuple[complex, int], ...]
    residuals: tuple[float, ...]
    rouche_radius: Fraction
    max_modulus: float

    def to_json(self) -> str:
        return json.dumps({
            "degree": self.degree,
            "real_root_counts": {
                "negative": self.negative_real,
                "zero": self.zero_root,
                "positive": self.positive_real,
            },
            "real_rooted": self.real_rooted,
            "integer_roots": {str(r): m
                              for r, m in sorted(self.integer_roots.items())},
            "complex_roots": [
                {"re": _fmt(z.real), "im": _fmt(z.imag), "mult": m}
                for z, m in self.complex_roots],
            "residuals": [_fmt(r) for r in self.residuals],
            "rouche_radius": str(self.rouche_radius),
            "max_modulus": _fmt(self.max_modulus),
        })


def _fmt(x: float) -> str:
    return format(x, ".12e")


def root_report(p: IntPoly, tol: float = DEFAULT_RESIDUAL_TOL) -> RootReport:
    _require_nonzero(p)
    neg, zero, pos = sign_profile(p)
    if p.degree >= 1:
        croots = tuple(complex_roots(p, tol))
    else:
        croots = ()
    residuals = tuple(backward_error(p, z) for z, _ in croots)
    maxmod = max((abs(z) for z, _ in croots), default=0.0)
    return RootReport(
        degree=p.degree,
        negative_real=neg,
        zero_root=zero,
        positive_real=pos,
        real_rooted=is_real_rooted(p),
        integer_roots=integer_roots(p),
        complex_roots=croots,
        residuals=residuals,
        rouche_radius=rouche_bound(p),
        max_modulus=maxmod,
    )


def scatter_rows(p: IntPoly, graph6: str, family: str,
                 tol: float = DEFAULT_RESIDUAL_TOL) -> list[tuple[str, ...]]:
    """CSV rows (re, im, modulus, graph6, family), one per root w/ multiplicity."""
    rows = []
    if p.is_zero() or p.degree < 1:
        return rows
    for z, mult in complex_roots(p, tol):
        for _ in range(mult):
            rows.append((_fmt(z.real), _fmt(z.imag), _fmt(abs(z)),
                         graph6, family))
    return rows

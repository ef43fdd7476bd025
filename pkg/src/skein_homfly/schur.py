"""Symmetric-function layer: unknot invariants, plethysm, Jacobi-Trudi.

The central quantity is the colored unknot value

    s*_lambda(q, t) = sum over classes B of |lambda|:
        chi_lambda(C_B)/z_B * prod_j (t^{B_j} - t^{-B_j})/(q^{B_j} - q^{-B_j})

All such class sums (the torus engine feeds weighted versions of them) are
accumulated over one universal denominator

    D_n(q) = prod_{k=1}^{n} (q^k - q^{-k})^{floor(n/k)}

which every per-class bracket product divides, so summation never leaves a
single fraction.  The inner loops run on integer-keyed dicts of integer
coefficients; Fractions appear only at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from math import gcd, lcm

from .characters import character
from .errors import IntegralityViolation
from .exact import LaurentQT, RationalQT, _canon, div_bracket_coeffs, q_bracket
from .partitions import Partition, PartitionVector, partitions_of

# -- integer univariate helpers (exponent -> coefficient dicts in q) ---


def _umul(a: dict, b: dict) -> dict:
    """Multiply integer-keyed sparse univariate polynomials exactly."""
    if not a or not b:
        return {}
    la, lb = min(a), min(b)
    g = 0
    for e in a:
        g = gcd(g, e - la)
    for e in b:
        g = gcd(g, e - lb)
    if g == 0:
        g = 1
    xs = [0] * ((max(a) - la) // g + 1)
    for e, c in a.items():
        xs[(e - la) // g] = c
    ys = [0] * ((max(b) - lb) // g + 1)
    for e, c in b.items():
        ys[(e - lb) // g] = c
    out = [0] * (len(xs) + len(ys) - 1)
    for i, x in enumerate(xs):
        if x:
            for j, y in enumerate(ys):
                if y:
                    out[i + j] += x * y
    base = la + lb
    return {base + g * k: v for k, v in enumerate(out) if v}


def _udiv_bracket(a: dict, k: int) -> dict:
    """Exact division of a univariate q-polynomial by q^k - q^-k."""
    if not a:
        return {}
    out = div_bracket_coeffs(a, k)
    assert out is not None, "bracket division not exact"
    return out


def _bracket_poly(k: int) -> dict:
    return {k: 1, -k: -1}


@lru_cache(maxsize=None)
def _universal_denominator_coeffs(n: int) -> tuple:
    """D_n(q) = prod_k (q^k - q^-k)^{floor(n/k)} as a sorted item tuple."""
    poly = {0: 1}
    for k in range(1, n + 1):
        for _ in range(n // k):
            poly = _umul(poly, _bracket_poly(k))
    return tuple(sorted(poly.items()))


def universal_denominator(n: int) -> LaurentQT:
    return LaurentQT({(e, 0): c for e, c in _universal_denominator_coeffs(n)})


@lru_cache(maxsize=None)
def _class_data(n: int) -> tuple:
    """Per class nu of n: (nu, z_nu, t-bracket product, D_n / q-bracket product)."""
    d_n = dict(_universal_denominator_coeffs(n))
    out = []
    for nu in partitions_of(n):
        tpoly = {0: 1}
        for p in nu:
            tpoly = _umul(tpoly, _bracket_poly(p))
        qco = dict(d_n)
        for p in nu:
            qco = _udiv_bracket(qco, p)
        out.append((nu, nu.z_factor(), tuple(sorted(tpoly.items())), tuple(sorted(qco.items()))))
    return tuple(out)


@lru_cache(maxsize=None)
def _z_lcm(n: int) -> int:
    out = 1
    for nu in partitions_of(n):
        out = lcm(out, nu.z_factor())
    return out


def character_bracket_sum(n: int, weights, ram: int = 1, require_integral: bool = False) -> RationalQT:
    """Accumulate sum_mu w_mu(q) * s*_mu over the universal denominator.

    ``weights`` maps each partition mu of n to a univariate q-polynomial
    given as {scaled exponent -> integer coefficient}, scaled by ``ram``
    (exponent e stands for q^(e/ram)).  With require_integral set, any
    fractional q-exponent surviving the summation raises
    IntegralityViolation.
    """
    if n == 0:
        total = sum(w.get(0, 0) for w in weights.values())
        return RationalQT(LaurentQT.from_int(total))
    zl = _z_lcm(n)
    num = {}
    for nu, z, tpoly, qco in _class_data(n):
        g = {}
        for mu, w in weights.items():
            chi = character(mu, nu)
            if chi:
                for e, c in w.items():
                    s = g.get(e, 0) + chi * c
                    if s == 0:
                        g.pop(e, None)
                    else:
                        g[e] = s
        if not g:
            continue
        qscaled = {e * ram: c for e, c in qco}
        h = _umul(g, qscaled)
        mult = zl // z
        for te, tc in tpoly:
            f = tc * mult
            for qe, hc in h.items():
                key = (qe, te)
                s = num.get(key, 0) + f * hc
                if s == 0:
                    num.pop(key, None)
                else:
                    num[key] = s
    terms = {}
    for (qe, te), c in num.items():
        if qe % ram:
            if require_integral:
                raise IntegralityViolation(
                    f"fractional q-exponent {Fraction(qe, ram)} survived summation"
                )
            terms[(_canon(Fraction(qe, ram)), te)] = c
        else:
            terms[(qe // ram, te)] = c
    den = universal_denominator(n) * zl
    return RationalQT(LaurentQT(terms), den).simplified()


@lru_cache(maxsize=None)
def unknot_value(lam: Partition) -> RationalQT:
    """Colored invariant of the zero-framed unknot (the s* evaluation)."""
    if lam.size == 0:
        return RationalQT.one()
    return character_bracket_sum(lam.size, {lam: {0: 1}})


# -- plethysm coefficients ---------------------------------------------


@dataclass(frozen=True)
class SchurExpansion:
    """Integer expansion of a degree-homogeneous element on the Schur basis."""

    degree: int
    coeffs: dict

    def __post_init__(self):
        for p in self.coeffs:
            if p.size != self.degree:
                raise ValueError(f"partition {p} has size != {self.degree}")

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].parts, reverse=True)

    def __getitem__(self, p: Partition) -> int:
        return self.coeffs.get(p, 0)

    def __str__(self):
        return "\n".join(f"{p}: {c}" for p, c in self.sorted_items())


@lru_cache(maxsize=None)
def _plethysm_cached(m: int, colors: tuple) -> SchurExpansion:
    degrees = [a.size for a in colors]
    n = m * sum(degrees)
    if n == 0:
        return SchurExpansion(0, {Partition(()): 1})
    acc = {}
    for combo in product(*(partitions_of(d) for d in degrees)):
        w = Fraction(1)
        for a, b in zip(colors, combo):
            chi = character(a, b)
            if chi == 0:
                w = 0
                break
            w *= Fraction(chi, b.z_factor())
        if w == 0:
            continue
        rho = Partition(sorted((m * p for b in combo for p in b), reverse=True))
        for mu in partitions_of(n):
            chi = character(mu, rho)
            if chi:
                acc[mu] = acc.get(mu, 0) + w * chi
    out = {}
    for mu, c in acc.items():
        if c == 0:
            continue
        if c.denominator != 1:
            raise IntegralityViolation(f"non-integer plethysm coefficient {c} at {mu}")
        out[mu] = int(c)
    return SchurExpansion(n, out)


def plethysm_coefficients(m: int, colors) -> SchurExpansion:
    """Schur expansion of prod_alpha s_{A^alpha}(x_1^m, x_2^m, ...).

    The coefficient at mu is the class sum over tuples (B^1..B^L) of
    partitions of the color sizes:
        prod_alpha chi_{A^alpha}(C_{B^alpha})/z_{B^alpha}
        * chi_mu(C at the cycle type joining all parts m*B^alpha_j).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if isinstance(colors, PartitionVector):
        colors = colors.components
    return _plethysm_cached(m, tuple(colors))


# -- Jacobi-Trudi determinants (test oracle) ---------------------------


def _poly_mul_multi(a: dict, b: dict) -> dict:
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            k = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(k, 0) + ca * cb
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
    return out


def complete_symmetric_poly(m: int, nvars: int) -> dict:
    """h_m in nvars variables as {exponent tuple -> coefficient}."""
    if m < 0:
        return {}
    out = {}
    for combo in combinations_with_replacement(range(nvars), m):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + 1
    return out


def elementary_symmetric_poly(m: int, nvars: int) -> dict:
    """e_m in nvars variables."""
    if m < 0 or m > nvars:
        return {}
    out = {}
    for combo in combinations(range(nvars), m):
        e = [0] * nvars
        for i in combo:
            e[i] = 1
        out[tuple(e)] = 1
    return out


def power_sum_poly(k: int, nvars: int) -> dict:
    e0 = (0,) * nvars
    if k == 0:
        return {e0: nvars}
    out = {}
    for i in range(nvars):
        e = [0] * nvars
        e[i] = k
        out[tuple(e)] = 1
    return out


def jacobi_trudi_schur(lam: Partition, nvars: int, kind: str = "h") -> dict:
    """Schur polynomial of lam in nvars variables by determinant expansion.

    kind "h" uses det(h_{lam_i - i + j}); kind "e" uses the conjugate
    elementary variant det(e_{lam^t_i - i + j}).  Test oracle only.
    """
    if kind == "e":
        shape = lam.conjugate()
        gen = elementary_symmetric_poly
    else:
        shape = lam
        gen = complete_symmetric_poly
    l = shape.length
    if l == 0:
        return {(0,) * nvars: 1}
    if nvars < lam.length:
        raise ValueError("need at least l(lambda) variables")
    entries = {}
    for i in range(l):
        for j in range(l):
            entries[(i, j)] = gen(shape[i] - (i + 1) + (j + 1), nvars)
    total = {}
    for perm in permutations(range(l)):
        inv = sum(1 for i in range(l) for j in range(i + 1, l) if perm[i] > perm[j])
        prod_poly = {(0,) * nvars: 1}
        for i in range(l):
            prod_poly = _poly_mul_multi(prod_poly, entries[(i, perm[i])])
            if not prod_poly:
                break
        sign = -1 if inv % 2 else 1
        for e, c in prod_poly.items():
            s = total.get(e, 0) + sign * c
            if s == 0:
                total.pop(e, None)
            else:
                total[e] = s
    return total

"""Exact sparse Laurent arithmetic in (q, t) and series-based limits.

The coefficient domain is the rationals (stdlib ``fractions.Fraction``,
stored as plain ``int`` whenever the denominator is 1).  q-exponents may be
exact rationals -- fractional powers of q enter through m-th roots of twist
monomials and must cancel to integers in any public result -- while
t-exponents are always integers.

Limits at q=1 or t=1 are computed by truncated series expansion around the
point, never by polynomial gcd in two variables: write the variable as
1+eps, expand numerator and denominator to their first non-vanishing order,
and compare orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import FractionalExponentSign, LimitDoesNotExist, ZeroFunction


def _canon(x):
    """Collapse Fraction with denominator 1 to int."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _fmt_rational(x) -> str:
    """Print an int or Fraction as "a" or "a/b"."""
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


class LaurentQT:
    """Sparse exact Laurent polynomial in q and t.

    Terms live in a mapping ``(q_exp, t_exp) -> coefficient`` with no zero
    coefficients stored.  Values are immutable; all operations allocate
    fresh results, so instances are safe to share across threads.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (qe, te), c in terms.items():
                c = _canon(c)
                if c == 0:
                    continue
                qe = _canon(qe)
                if not isinstance(te, int):
                    te = _canon(te)
                    if not isinstance(te, int):
                        raise ValueError(f"t-exponent must be an integer: {te}")
                clean[(qe, te)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentQT is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff, q_exp=0, t_exp=0):
        return cls({(q_exp, t_exp): coeff})

    @classmethod
    def from_int(cls, k):
        return cls({(0, 0): k})

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): 1}

    def sorted_terms(self):
        """Terms in canonical order: (q_exp, t_exp) ascending."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def exponents(self, variable: str):
        idx = 0 if variable == "q" else 1
        return [k[idx] for k in self.terms]

    def has_integral_q_exponents(self) -> bool:
        return all(isinstance(qe, int) for qe, _ in self.terms)

    def constant_value(self):
        """Coefficient view of a constant polynomial; raises if non-constant."""
        if self.is_zero():
            return 0
        if set(self.terms) != {(0, 0)}:
            raise ValueError("not a constant")
        return self.terms[(0, 0)]

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return LaurentQT(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQT({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentQT.zero()
            return LaurentQT({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, LaurentQT):
            return NotImplemented
        out = {}
        for (qa, ta), ca in self.terms.items():
            for (qb, tb), cb in other.terms.items():
                k = (qa + qb, ta + tb)
                s = out.get(k, 0) + ca * cb
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        return LaurentQT(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            ((qe, te), c), = self.terms.items()
            return LaurentQT({(qe * e, te * e): Fraction(c) ** e})
        result = LaurentQT.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def _coerce(self, other):
        if isinstance(other, LaurentQT):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentQT({(0, 0): other})
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __str__(self):
        return canonical_text(self)

    def __repr__(self):
        return f"LaurentQT<{canonical_text(self)}>"


def canonical_text(p: LaurentQT) -> str:
    """Deterministic text form: terms sorted by (q_exp, t_exp) ascending.

    Example: ``-1*q^-3*t^2 + 2*q^1/2*t^0``.
    """
    if p.is_zero():
        return "0"
    parts = []
    for i, ((qe, te), c) in enumerate(p.sorted_terms()):
        body = f"{_fmt_rational(abs(c))}*q^{_fmt_rational(qe)}*t^{_fmt_rational(te)}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def q_power(e) -> LaurentQT:
    return LaurentQT({(e, 0): 1})


def t_power(e: int) -> LaurentQT:
    return LaurentQT({(0, e): 1})


def q_bracket(k: int) -> LaurentQT:
    """q^k - q^-k."""
    if k == 0:
        return LaurentQT.zero()
    return LaurentQT({(k, 0): 1, (-k, 0): -1})


def t_bracket(k: int) -> LaurentQT:
    """t^k - t^-k."""
    if k == 0:
        return LaurentQT.zero()
    return LaurentQT({(0, k): 1, (0, -k): -1})


_Q_TARGETS = {"q": (1, 1), "q^-1": (1, -1), "-q": (-1, 1), "-q^-1": (-1, -1)}
_T_TARGETS = {"t": (1, 1), "t^-1": (1, -1)}


def substitute(p: LaurentQT, q: str = "q", t: str = "t") -> LaurentQT:
    """Map q and t to signed monomials of themselves.

    ``q`` is one of "q", "q^-1", "-q", "-q^-1"; ``t`` is "t" or "t^-1".
    A sign on q contributes (-1)^a to the coefficient of q^a t^b and
    requires a to be an integer.
    """
    try:
        qs, qi = _Q_TARGETS[q]
        ts, ti = _T_TARGETS[t]
    except KeyError as e:
        raise ValueError(f"unsupported substitution target: {e.args[0]!r}") from None
    out = {}
    for (qe, te), c in p.terms.items():
        if qs < 0:
            if not isinstance(qe, int):
                raise FractionalExponentSign(
                    f"cannot apply q -> {q} to fractional exponent {qe}"
                )
            if qe % 2:
                c = -c
        out[(qe * qi, te * ti)] = c
    return LaurentQT(out)


def evaluate(p: LaurentQT, q_val: float, t_val: float) -> float:
    """Numerical evaluation; sanity-check hook only, never used for results."""
    total = 0.0
    for (qe, te), c in p.terms.items():
        total += float(c) * (float(q_val) ** float(qe)) * (float(t_val) ** te)
    return total


# -- JSON wire format -------------------------------------------------


def laurent_to_json(p: LaurentQT) -> list:
    """Serialize as records {qn, qd, t, cn, cd} in canonical order."""
    out = []
    for (qe, te), c in p.sorted_terms():
        qf = Fraction(qe)
        cf = Fraction(c)
        out.append(
            {
                "qn": qf.numerator,
                "qd": qf.denominator,
                "t": te,
                "cn": cf.numerator,
                "cd": cf.denominator,
            }
        )
    return out


def laurent_from_json(records) -> LaurentQT:
    terms = {}
    for r in records:
        qe = _canon(Fraction(r["qn"], r["qd"]))
        c = _canon(Fraction(r["cn"], r["cd"]))
        terms[(qe, int(r["t"]))] = c
    return LaurentQT(terms)


# -- rational functions -----------------------------------------------


class RationalQT:
    """Quotient of two LaurentQT values; the field where limits live.

    Normalization shifts a common monomial so the collective minimal
    exponent in each variable is 0, scales both parts to coprime integer
    content, and gives the denominator a positive leading coefficient.
    Equality is by cross-multiplication, so representatives that differ by
    a common polynomial factor still compare equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentQT, den: LaurentQT = None):
        if den is None:
            den = LaurentQT.one()
        if isinstance(num, (int, Fraction)):
            num = LaurentQT({(0, 0): num})
        if isinstance(den, (int, Fraction)):
            den = LaurentQT({(0, 0): den})
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = LaurentQT.zero(), LaurentQT.one()
        else:
            num, den = _normalize_pair(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalQT is immutable")

    @classmethod
    def one(cls):
        return cls(LaurentQT.one())

    @classmethod
    def from_laurent(cls, p: LaurentQT):
        return cls(p)

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return len(self.den.terms) == 1

    def as_laurent(self) -> LaurentQT:
        """Return the value as a Laurent polynomial, folding unit denominators."""
        if self.den.is_one():
            return self.num
        if len(self.den.terms) == 1:
            ((qe, te), c), = self.den.terms.items()
            return self.num * LaurentQT({(-qe, -te): Fraction(1) / c})
        q = _exact_div_univariate(self.num, self.den)
        if q is not None:
            return q
        raise ValueError("value is not a Laurent polynomial")

    def _coerce(self, other):
        if isinstance(other, RationalQT):
            return other
        if isinstance(other, (LaurentQT, int, Fraction)):
            return RationalQT(other if isinstance(other, LaurentQT) else LaurentQT({(0, 0): other}))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalQT(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalQT(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalQT(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero RationalQT")
        return RationalQT(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalQT(self.den, self.num) ** (-e)
        out = RationalQT.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __str__(self):
        if len(self.den.terms) == 1:
            return canonical_text(self.as_laurent())
        return f"({canonical_text(self.num)}) / ({canonical_text(self.den)})"

    def __repr__(self):
        return f"RationalQT<{self}>"

    def substituted(self, q: str = "q", t: str = "t") -> "RationalQT":
        return RationalQT(substitute(self.num, q, t), substitute(self.den, q, t))

    def simplified(self) -> "RationalQT":
        """Cancel shared bracket factors v^k - v^-k and monomial denominators.

        This is content reduction, not general gcd: it strips exactly the
        structured factors that class sums and trace recursions accumulate,
        and folds the denominator into the numerator once it is down to a
        single term.
        """
        num, den = self.num, self.den
        if num.is_zero():
            return RationalQT(num)
        for variable in ("q", "t"):
            exps = den.exponents(variable)
            k_max = int(max(exps) - min(exps)) // 2
            for k in range(k_max, 0, -1):
                while True:
                    dd = _div_bracket(den, variable, k)
                    if dd is None:
                        break
                    dn = _div_bracket(num, variable, k)
                    if dn is None:
                        break
                    num, den = dn, dd
        if len(den.terms) == 1:
            ((qe, te), c), = den.terms.items()
            num = num * LaurentQT({(-qe, -te): Fraction(1) / c})
            den = LaurentQT.one()
        return RationalQT(num, den)


def _normalize_pair(num: LaurentQT, den: LaurentQT):
    qmin = min(min(num.exponents("q")), min(den.exponents("q")))
    tmin = min(min(num.exponents("t")), min(den.exponents("t")))
    shift = LaurentQT({(-qmin, -tmin): 1})
    num = num * shift
    den = den * shift
    # scale to coprime integer content with positive denominator lead
    denom_lcm = 1
    for c in list(num.terms.values()) + list(den.terms.values()):
        if isinstance(c, Fraction):
            denom_lcm = lcm(denom_lcm, c.denominator)
    if denom_lcm != 1:
        num = num * denom_lcm
        den = den * denom_lcm
    content = 0
    for c in list(num.terms.values()) + list(den.terms.values()):
        content = gcd(content, int(c))
    lead = den.sorted_terms()[-1][1]
    if lead < 0:
        content = -content
    if content not in (0, 1):
        num = num * Fraction(1, content)
        den = den * Fraction(1, content)
    return num, den


def delta() -> RationalQT:
    """Value of a plain closed curve: (t - t^-1)/(q - q^-1)."""
    return RationalQT(t_bracket(1), q_bracket(1))


# -- truncated series and limits --------------------------------------


@dataclass(frozen=True)
class TruncSeries:
    """Expansion f(1+eps) + O(eps^{order+1}) in one variable around 1.

    coeffs[k] is the eps^k coefficient, a Laurent polynomial in the other
    variable.
    """

    variable: str
    order: int
    coeffs: tuple
    center: int = 1

    def first_nonzero(self):
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return None


def truncated_series(p: LaurentQT, variable: str, order: int) -> TruncSeries:
    """Expand p around variable = 1 through eps^order, exactly.

    Each term c * v^e contributes c * binom(e, k) at eps^k; the binomial is
    generalized, so e may be any exact rational.
    """
    if variable not in ("q", "t"):
        raise ValueError("variable must be 'q' or 't'")
    levels = [dict() for _ in range(order + 1)]
    for (qe, te), c in p.terms.items():
        if variable == "q":
            e, kept = qe, (0, te)
        else:
            e, kept = te, (qe, 0)
        running = c
        for k in range(order + 1):
            if running != 0:
                s = levels[k].get(kept, 0) + running
                if s == 0:
                    levels[k].pop(kept, None)
                else:
                    levels[k][kept] = s
            if k == order:
                break
            step = e - k
            if isinstance(running, int) and isinstance(step, int):
                running = running * step // (k + 1)
            else:
                running = running * step / (k + 1)
                if isinstance(running, Fraction) and running.denominator == 1:
                    running = int(running)
    return TruncSeries(variable, order, tuple(LaurentQT(lv) for lv in levels))


def _expansion_cap(p: LaurentQT, variable: str) -> int:
    """Upper bound for the vanishing order of p at variable = 1."""
    exps = p.exponents(variable)
    ram = 1
    for e in exps:
        if isinstance(e, Fraction):
            ram = lcm(ram, e.denominator)
    span = (max(exps) - min(exps)) * ram
    return int(span) + 1


def expand_series(f: RationalQT, variable: str):
    """Expand num and den around variable = 1 to first non-vanishing order.

    Returns (order_num, order_den, leading_num, leading_den) where the
    leading coefficients are Laurent polynomials in the other variable.
    Raises ZeroFunction if the numerator is identically zero (its vanishing
    order would be the +infinity sentinel).
    """
    if f.num.is_zero():
        raise ZeroFunction("numerator is identically zero")
    cap = max(_expansion_cap(f.num, variable), _expansion_cap(f.den, variable))
    order = 4
    while True:
        sn = truncated_series(f.num, variable, order)
        sd = truncated_series(f.den, variable, order)
        on = sn.first_nonzero()
        od = sd.first_nonzero()
        if on is not None and od is not None:
            return on, od, sn.coeffs[on], sd.coeffs[od]
        if order >= cap:
            # a nonzero Laurent polynomial cannot vanish beyond its span
            raise ZeroFunction("no non-vanishing coefficient within the exponent span")
        order = min(order * 2, cap)


def limit_at_one(f: RationalQT, variable: str):
    """Exact limit of f as the variable goes to 1.

    Returns a LaurentQT when the leading-coefficient division is exact,
    otherwise the reduced univariate RationalQT.  Raises LimitDoesNotExist
    on a pole and returns zero when the numerator vanishes faster.
    """
    if f.num.is_zero():
        return LaurentQT.zero()
    on, od, ln, ld = expand_series(f, variable)
    if on < od:
        raise LimitDoesNotExist(
            f"numerator vanishes to order {on} < denominator order {od} at {variable}=1"
        )
    if on > od:
        return LaurentQT.zero()
    quotient = _exact_div_univariate(ln, ld)
    if quotient is not None:
        return quotient
    g = _gcd_univariate(ln, ld)
    rnum = _exact_div_univariate(ln, g)
    rden = _exact_div_univariate(ld, g)
    return RationalQT(rnum, rden)


# -- univariate helpers (exact division, gcd) -------------------------


def div_bracket_coeffs(coeffs: dict, k: int):
    """Divide {exp -> coeff} by v^k - v^-k; None when not exact.

    Synthetic division against v^-k (v^2k - 1); works over any coefficient
    ring since it only adds and subtracts.
    """
    if not coeffs:
        return {}
    lo = min(coeffs)
    n = max(coeffs) - lo
    if n < 2 * k:
        return None
    s = [0] * (n + 1)
    for e, c in coeffs.items():
        s[e - lo] = c
    u = [0] * (n + 1)
    for j in range(n + 1):
        prev = u[j - 2 * k] if j >= 2 * k else 0
        u[j] = prev - s[j]
    top = n - 2 * k
    if any(u[j] != 0 for j in range(top + 1, n + 1)):
        return None
    return {lo + k + j: u[j] for j in range(top + 1) if u[j]}


def _div_bracket(p: LaurentQT, variable: str, k: int):
    """Exact division of p by variable^k - variable^-k, slice by slice."""
    main, kept = (0, 1) if variable == "q" else (1, 0)
    slices = {}
    for key, c in p.terms.items():
        slices.setdefault(key[kept], {})[key[main]] = c
    out = {}
    for other, coeffs in slices.items():
        q = div_bracket_coeffs(coeffs, k)
        if q is None:
            return None
        for e, c in q.items():
            out[(e, other) if variable == "q" else (other, e)] = c
    return LaurentQT(out)


def _detect_variable(p: LaurentQT):
    has_q = any(qe != 0 for qe, _ in p.terms)
    has_t = any(te != 0 for _, te in p.terms)
    if has_q and has_t:
        return None
    if has_t:
        return "t"
    return "q"


def _shared_variable(a: LaurentQT, b: LaurentQT):
    """Variable of two jointly univariate polynomials, or None on a mix."""
    has_q = any(qe != 0 for qe, _ in a.terms) or any(qe != 0 for qe, _ in b.terms)
    has_t = any(te != 0 for _, te in a.terms) or any(te != 0 for _, te in b.terms)
    if has_q and has_t:
        return None
    return "t" if has_t else "q"


def _to_coeff_list(p: LaurentQT, variable: str):
    """(min_exp_scaled, ram, coeffs ascending) for a univariate Laurent poly."""
    idx = 0 if variable == "q" else 1
    ram = 1
    for k in p.terms:
        e = k[idx]
        if isinstance(e, Fraction):
            ram = lcm(ram, e.denominator)
    exps = {}
    for k, c in p.terms.items():
        e = k[idx]
        exps[int(e * ram)] = c
    lo, hi = min(exps), max(exps)
    coeffs = [exps.get(i, 0) for i in range(lo, hi + 1)]
    return lo, ram, coeffs


def _from_coeff_list(lo, ram, coeffs, variable: str) -> LaurentQT:
    terms = {}
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        e = _canon(Fraction(lo + i, ram))
        key = (e, 0) if variable == "q" else (0, e)
        terms[key] = c
    return LaurentQT(terms)


def _exact_div_univariate(a: LaurentQT, b: LaurentQT):
    """a / b for univariate inputs in the same variable; None if not exact."""
    if b.is_zero():
        raise ZeroDivisionError("univariate division by zero")
    if a.is_zero():
        return LaurentQT.zero()
    variable = _shared_variable(a, b)
    if variable is None:
        return None
    la, ra, ca = _to_coeff_list(a, variable)
    lb, rb, cb = _to_coeff_list(b, variable)
    if ra != rb:
        r = lcm(ra, rb)
        la, ca = la * (r // ra), _stretch(ca, r // ra)
        lb, cb = lb * (r // rb), _stretch(cb, r // rb)
        ra = rb = r
    if len(ca) < len(cb):
        return None
    rem = [Fraction(c) for c in ca]
    div = [Fraction(c) for c in cb]
    out = [Fraction(0)] * (len(ca) - len(cb) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + len(div) - 1] / div[-1]
        out[i] = c
        if c != 0:
            for j, d in enumerate(div):
                rem[i + j] -= c * d
    if any(r != 0 for r in rem):
        return None
    return _from_coeff_list(la - lb, ra, [_canon(c) for c in out], variable)


def _stretch(coeffs, factor):
    out = [0] * ((len(coeffs) - 1) * factor + 1)
    for i, c in enumerate(coeffs):
        out[i * factor] = c
    return out


def _gcd_univariate(a: LaurentQT, b: LaurentQT) -> LaurentQT:
    """Primitive-normalized gcd of two univariate Laurent polynomials."""
    variable = _shared_variable(a, b)
    if variable is None:
        raise ValueError("gcd requires jointly univariate inputs")
    _, ra, ca = _to_coeff_list(a, variable)
    _, rb, cb = _to_coeff_list(b, variable)
    if ra != rb:
        r = lcm(ra, rb)
        ca = _stretch(ca, r // ra)
        cb = _stretch(cb, r // rb)
        ra = r
    x = [Fraction(c) for c in ca]
    y = [Fraction(c) for c in cb]
    x = _trim(x)
    y = _trim(y)
    while y:
        x = _poly_mod(x, y)
        x, y = y, x
    lead = x[-1]
    x = [c / lead for c in x]
    # integer-primitive form with positive lead for determinism
    den_l = 1
    for c in x:
        den_l = lcm(den_l, c.denominator)
    ints = [int(c * den_l) for c in x]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    return _from_coeff_list(0, ra, ints, variable)


def _trim(coeffs):
    # drop leading/trailing zeros; gcd is only defined up to a monomial
    i = 0
    while i < len(coeffs) and coeffs[i] == 0:
        i += 1
    j = len(coeffs)
    while j > i and coeffs[j - 1] == 0:
        j -= 1
    return coeffs[i:j]


def _poly_mod(x, y):
    x = list(x)
    while len(x) >= len(y) and any(c != 0 for c in x):
        if x[-1] == 0:
            x.pop()
            continue
        f = x[-1] / y[-1]
        off = len(x) - len(y)
        for j, d in enumerate(y):
            x[off + j] -= f * d
        x.pop()
    return _trim(x)

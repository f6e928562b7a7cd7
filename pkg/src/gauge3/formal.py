"""Truncated multivariate formal power series.

Series live over a commutative coefficient ring: a cyclotomic field optionally
extended by named formal constants (a2, a3, h1..h4, solver symbols).  Variables
are named and ordered; a variable either counts toward the total truncation
order (the t-variables) or carries a nilpotency cap (auxiliary insertion
parameters), in which case the cap bounds its exponent and the variable is
excluded from the total-order budget.  Absent monomials are zero.  All values
are immutable.
"""

from fractions import Fraction
from math import factorial

from gauge3.exactnum import CycloNum, FieldMismatch, coerce, cyclo_field


class RingMismatch(TypeError):
    pass


class CoeffRing:
    """Polynomials in formal constants over a cyclotomic field."""

    __slots__ = ("field", "constants", "_index")

    def __init__(self, field, constants=()):
        self.field = field
        self.constants = tuple(constants)
        if len(set(self.constants)) != len(self.constants):
            raise ValueError("duplicate constant names")
        self._index = {c: i for i, c in enumerate(self.constants)}

    def __eq__(self, other):
        return (
            isinstance(other, CoeffRing)
            and other.field == self.field
            and other.constants == self.constants
        )

    def __hash__(self):
        return hash((self.field, self.constants))

    def __repr__(self):
        if self.constants:
            return f"{self.field}[{','.join(self.constants)}]"
        return repr(self.field)

    def zero(self):
        return RingElem(self, {})

    def one(self):
        return self.from_scalar(1)

    def from_scalar(self, c):
        """Lift an int, Fraction, or CycloNum of the base field."""
        if isinstance(c, CycloNum):
            if c.field != self.field:
                c = coerce(c, self.field)
            val = c
        else:
            val = self.field.from_rational(Fraction(c))
        if val.is_zero():
            return self.zero()
        return RingElem(self, {(0,) * len(self.constants): val})

    def constant(self, name):
        exp = [0] * len(self.constants)
        exp[self._index[name]] = 1
        return RingElem(self, {tuple(exp): self.field.one()})


class RingElem:
    """A sparse polynomial in the ring's formal constants with CycloNum
    coefficients; the ring element type for every series below."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    def _lift(self, other):
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise RingMismatch(f"cannot mix {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.ring.from_scalar(other)
        return NotImplemented

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return RingElem(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                terms[e] = terms[e] + c if e in terms else c
        return RingElem(self.ring, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by an invertible scalar (constant-free element)."""
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if len(o.terms) != 1 or any(sum(e) for e in o.terms):
            raise ZeroDivisionError("division only by constant-free ring elements")
        ((_, c0),) = o.terms.items()
        inv = c0.inv()
        return RingElem(self.ring, {e: c * inv for e, c in self.terms.items()})

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            mono = "*".join(
                f"{n}^{k}" if k > 1 else n
                for n, k in zip(self.ring.constants, e)
                if k
            )
            c = repr(self.terms[e])
            bits.append(f"{c}*{mono}" if mono else c)
        return " + ".join(bits)

    def constant_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def is_scalar(self):
        return all(sum(e) == 0 for e in self.terms)

    def scalar_part(self):
        zero_exp = (0,) * len(self.ring.constants)
        return self.terms.get(zero_exp, self.ring.field.zero())

    def substitute(self, values, target_ring=None):
        """Evaluate some constants at CycloNum/Fraction values; the result
        lives in `target_ring` (default: same ring minus the substituted
        names)."""
        names = [c for c in self.ring.constants if c not in values]
        ring = target_ring or CoeffRing(self.ring.field, tuple(names))
        out = ring.zero()
        for e, c in self.terms.items():
            factor = ring.from_scalar(c)
            new_exp = [0] * len(ring.constants)
            ok = True
            for name, k in zip(self.ring.constants, e):
                if not k:
                    continue
                if name in values:
                    v = values[name]
                    if not isinstance(v, CycloNum):
                        v = self.ring.field.from_rational(Fraction(v))
                    factor = factor * ring.from_scalar(v**k)
                else:
                    new_exp[ring._index[name]] += k
            if ok:
                mono = RingElem(ring, {tuple(new_exp): ring.field.one()})
                out = out + factor * mono
        return out


class VariableSet:
    """Ordered series variables; `caps[name]` bounds a nilpotent auxiliary
    variable (exponent < cap) and removes it from the total-order budget."""

    __slots__ = ("names", "caps", "_index")

    def __init__(self, names, caps=None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.caps = dict(caps or {})
        for name, cap in self.caps.items():
            if name not in self.names:
                raise ValueError(f"cap for unknown variable {name}")
            if cap < 1:
                raise ValueError("nilpotency caps must be >= 1")
        self._index = {n: i for i, n in enumerate(self.names)}

    def __eq__(self, other):
        return (
            isinstance(other, VariableSet)
            and other.names == self.names
            and other.caps == self.caps
        )

    def __hash__(self):
        return hash((self.names, tuple(sorted(self.caps.items()))))

    def __repr__(self):
        return f"VariableSet({self.names}, caps={self.caps})"

    def index(self, name):
        return self._index[name]

    def counted_degree(self, exps):
        """Total degree in the uncapped (budgeted) variables."""
        return sum(k for n, k in zip(self.names, exps) if n not in self.caps)

    def admissible(self, exps, order):
        if self.counted_degree(exps) > order:
            return False
        for n, cap in self.caps.items():
            if exps[self._index[n]] >= cap:
                return False
        return True


T23 = VariableSet(("t2", "t3"))


class TruncatedSeries:
    """A truncated formal power series with RingElem coefficients keyed by
    exponent tuples."""

    __slots__ = ("variables", "ring", "order", "coeffs")

    def __init__(self, variables, ring, order, coeffs=None):
        self.variables = variables
        self.ring = ring
        self.order = order
        clean = {}
        for e, c in (coeffs or {}).items():
            if not isinstance(c, RingElem):
                c = ring.from_scalar(c)
            if not c.is_zero() and variables.admissible(e, order):
                clean[e] = c
        self.coeffs = clean

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls, variables, ring, order):
        return cls(variables, ring, order, {})

    @classmethod
    def one(cls, variables, ring, order):
        return cls(variables, ring, order, {(0,) * len(variables.names): ring.one()})

    @classmethod
    def monomial(cls, variables, ring, order, exps, coeff=1):
        return cls(variables, ring, order, {tuple(exps): ring.from_scalar(coeff)})

    @classmethod
    def variable(cls, variables, ring, order, name, coeff=1):
        e = [0] * len(variables.names)
        e[variables.index(name)] = 1
        return cls.monomial(variables, ring, order, e, coeff)

    # -- helpers ---------------------------------------------------------
    def _check(self, other):
        if other.variables != self.variables:
            raise RingMismatch("variable sets differ")
        if other.ring != self.ring:
            raise RingMismatch("coefficient rings differ")

    def is_zero(self):
        return not self.coeffs

    def constant_term(self):
        return self.coeffs.get(
            (0,) * len(self.variables.names), self.ring.zero()
        )

    def coefficient(self, exps):
        return self.coeffs.get(tuple(exps), self.ring.zero())

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.ring == other.ring
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if not self.coeffs:
            return "0 + O(%d)" % (self.order + 1)
        bits = []
        for e in sorted(self.coeffs):
            mono = "*".join(
                f"{n}^{k}" if k > 1 else n
                for n, k in zip(self.variables.names, e)
                if k
            )
            bits.append(f"({self.coeffs[e]!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits) + f" + O({self.order + 1})"

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloNum, RingElem)):
            other = TruncatedSeries(
                self.variables,
                self.ring,
                self.order,
                {(0,) * len(self.variables.names): other},
            )
        self._check(other)
        order = min(self.order, other.order)
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs[e] + c if e in coeffs else c
        return TruncatedSeries(self.variables, self.ring, order, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(
            self.variables, self.ring, self.order, {e: -c for e, c in self.coeffs.items()}
        )

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncatedSeries) else -self.ring.from_scalar(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum, RingElem)):
            c = other if isinstance(other, RingElem) else self.ring.from_scalar(other)
            return TruncatedSeries(
                self.variables, self.ring, self.order,
                {e: v * c for e, v in self.coeffs.items()},
            )
        self._check(other)
        order = min(self.order, other.order)
        coeffs = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                if not self.variables.admissible(e, order):
                    continue
                c = c1 * c2
                coeffs[e] = coeffs[e] + c if e in coeffs else c
        return TruncatedSeries(self.variables, self.ring, order, coeffs)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = TruncatedSeries.one(self.variables, self.ring, self.order)
        for _ in range(k):
            out = out * self
        return out

    # -- structural operations ----------------------------------------------
    def truncate(self, order):
        return TruncatedSeries(self.variables, self.ring, order, self.coeffs)

    def map_coefficients(self, fn, ring=None):
        ring = ring or self.ring
        return TruncatedSeries(
            self.variables, ring, self.order, {e: fn(c) for e, c in self.coeffs.items()}
        )

    def scale_vars(self, factors):
        """Multiply each monomial by prod factor(v)^exponent(v); factors map
        variable names to ring scalars (CycloNum or Fraction)."""
        lifted = {}
        for name, f in factors.items():
            lifted[self.variables.index(name)] = (
                f if isinstance(f, RingElem) else self.ring.from_scalar(f)
            )
        coeffs = {}
        for e, c in self.coeffs.items():
            for idx, f in lifted.items():
                k = e[idx]
                for _ in range(k):
                    c = c * f
            coeffs[e] = coeffs.get(e, self.ring.zero()) + c
        return TruncatedSeries(self.variables, self.ring, self.order, coeffs)

    def substitute_sign(self, signs):
        """The algebra homomorphism multiplying each variable by +-1."""
        for v, s in signs.items():
            if s not in (1, -1):
                raise ValueError("substitute_sign takes signs +-1")
        return self.scale_vars({v: Fraction(s) for v, s in signs.items()})

    def pde_apply(self, orders):
        """Iterated formal partial derivatives; `orders` maps variable name to
        derivative order."""
        out = self
        for name, k in orders.items():
            for _ in range(k):
                out = out._derivative(name)
        return out

    def _derivative(self, name):
        idx = self.variables.index(name)
        coeffs = {}
        for e, c in self.coeffs.items():
            k = e[idx]
            if k:
                e2 = list(e)
                e2[idx] = k - 1
                coeffs[tuple(e2)] = c * k
        return TruncatedSeries(self.variables, self.ring, self.order, coeffs)

    def partial_and_evaluate(self, name, k):
        """k-th derivative in `name` evaluated at zero: k! times the degree-k
        slice, remaining variables intact (the variable stays in the set with
        exponent 0)."""
        idx = self.variables.index(name)
        fact = factorial(k)
        coeffs = {}
        for e, c in self.coeffs.items():
            if e[idx] == k:
                e2 = list(e)
                e2[idx] = 0
                coeffs[tuple(e2)] = c * fact
        return TruncatedSeries(self.variables, self.ring, self.order, coeffs)

    def shift_down(self, name, k):
        """Exact division by name^k; monomials with smaller exponent must be
        absent."""
        idx = self.variables.index(name)
        coeffs = {}
        for e, c in self.coeffs.items():
            if e[idx] < k:
                raise ValueError(f"series not divisible by {name}^{k}")
            e2 = list(e)
            e2[idx] -= k
            coeffs[tuple(e2)] = c
        return TruncatedSeries(self.variables, self.ring, self.order, coeffs)

    def restrict_vars(self, variables):
        """Re-home onto a sub-VariableSet; dropped variables must be unused."""
        keep = [self.variables.index(n) for n in variables.names]
        drop = [i for i in range(len(self.variables.names)) if i not in keep]
        coeffs = {}
        for e, c in self.coeffs.items():
            if any(e[i] for i in drop):
                raise ValueError("series uses a dropped variable")
            coeffs[tuple(e[i] for i in keep)] = c
        return TruncatedSeries(variables, self.ring, self.order, coeffs)

    def agrees_with(self, other, order):
        a = self.truncate(order)
        b = other.truncate(order)
        return a.coeffs == b.coeffs

    def to_coeff_dict(self):
        """{monomial-string: exact coefficient string}, sorted keys."""
        out = {}
        for e in sorted(self.coeffs):
            mono = "*".join(
                f"{n}^{k}" if k > 1 else n
                for n, k in zip(self.variables.names, e)
                if k
            ) or "1"
            out[mono] = repr(self.coeffs[e])
        return out


# -- analytic constructors ---------------------------------------------------

def exp_of(f):
    """exp of a series with zero constant term."""
    if not f.constant_term().is_zero():
        raise ValueError("exp_of requires zero constant term")
    out = TruncatedSeries.one(f.variables, f.ring, f.order)
    term = out
    bound = f.order + sum(c - 1 for c in f.variables.caps.values())
    for k in range(1, bound + 1):
        term = term * f
        if term.is_zero():
            break
        term = term * Fraction(1, k)
        out = out + term
    return out


def _i_of(ring):
    f12 = cyclo_field(12)
    if ring.field.conductor % 4 == 0:
        return ring.field.zeta_power(ring.field.conductor // 4)
    raise ValueError("need i in the coefficient field (conductor divisible by 4)")


def cosh_of(f):
    return (exp_of(f) + exp_of(-f)) * Fraction(1, 2)


def sinh_of(f):
    return (exp_of(f) - exp_of(-f)) * Fraction(1, 2)


def cos_of(f):
    i = _i_of(f.ring)
    return (exp_of(f * i) + exp_of(f * (-i))) * Fraction(1, 2)


def sin_of(f):
    i = _i_of(f.ring)
    return (exp_of(f * i) - exp_of(f * (-i))) * (i.inv() * Fraction(1, 2))


def elem_series(kind, c, var, variables, ring, order):
    """Taylor series of kind(c*v) for kind in exp/cos/sin/cosh/sinh; the
    coefficient c is a ring scalar and v a series variable."""
    v = TruncatedSeries.variable(variables, ring, order, var)
    arg = v * c
    table = {"exp": exp_of, "cos": cos_of, "sin": sin_of, "cosh": cosh_of, "sinh": sinh_of}
    try:
        fn = table[kind]
    except KeyError:
        raise ValueError(f"unknown elementary series kind {kind!r}") from None
    return fn(arg)

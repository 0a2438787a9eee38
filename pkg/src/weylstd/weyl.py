"""Sparse exact arithmetic for polynomial differential operators.

Two algebras live here.  ``WeylOperator`` is an element of the algebra
generated by x_1..x_n and D_1..D_n with D_i x_i = x_i D_i + 1, stored in
normal order x^alpha D^beta.  ``HomogOperator`` is an element of its
graded companion with an extra central variable t and the relation
D_i x_i = x_i D_i + t^2; the graded degree of t^k x^alpha D^beta is
k + |alpha| + |beta|.

Exponent keys are flat integer tuples: ``(a_1..a_n, b_1..b_n)`` for the
plain algebra and ``(k, a_1..a_n, b_1..b_n)`` for the graded one.  Term
maps never hold zero coefficients, so equality of operators is equality
of their term maps.  All operators are immutable values: every operation
returns a fresh object and nothing mutates ``terms`` after construction.

``Polynomial`` carries the standard action (D_i = d/dx_i, x_i =
multiplication) used as an independent correctness oracle for the
noncommutative product.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iter_product
from math import comb, factorial, perm

NEG_INF = float("-inf")


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_leq(u, v):
    """Componentwise <= (the divisibility order on exponents)."""
    return all(a <= b for a, b in zip(u, v))


def vec_max(u, v):
    """Componentwise max: the lcm exponent of two monomials."""
    return tuple(max(a, b) for a, b in zip(u, v))


def _clean_terms(terms, width, kind):
    out = {}
    for key, coeff in terms.items():
        key = tuple(key)
        if len(key) != width or any((not isinstance(e, int)) or e < 0 for e in key):
            raise ValueError(f"bad {kind} exponent {key!r}: expected {width} naturals")
        if isinstance(coeff, int):
            coeff = Fraction(coeff)
        if coeff == 0:
            continue
        out[key] = coeff
    return out


class WeylOperator:
    """Normal-ordered differential operator sum(c_{a,b} x^a D^b)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.terms = _clean_terms(dict(terms or {}), 2 * n, "operator")

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * (2 * n): c})

    @classmethod
    def x(cls, n, i, coeff=1):
        """The generator x_i (1-based i)."""
        key = tuple(1 if j == i - 1 else 0 for j in range(2 * n))
        return cls(n, {key: coeff})

    @classmethod
    def d(cls, n, i, coeff=1):
        """The generator D_i (1-based i)."""
        key = tuple(1 if j == n + i - 1 else 0 for j in range(2 * n))
        return cls(n, {key: coeff})

    @classmethod
    def monomial(cls, n, key, coeff=1):
        return cls(n, {tuple(key): coeff})

    def is_zero(self):
        return not self.terms

    def _same_algebra(self, other):
        if self.n != other.n:
            raise ValueError("variable count mismatch")

    def support(self):
        """The Newton diagram: set of exponent keys with nonzero coefficient."""
        return set(self.terms)

    def total_degree(self):
        """Max of |alpha|+|beta| over the support; -inf for the zero operator."""
        if not self.terms:
            return NEG_INF
        return max(sum(key) for key in self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, WeylOperator)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        self._same_algebra(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key)
            s = coeff if acc is None else acc + coeff
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return WeylOperator(self.n, out)

    def __neg__(self):
        return WeylOperator(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return WeylOperator.zero(self.n)
        return WeylOperator(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WeylOperator):
            return self.scale(other)
        self._same_algebra(other)
        n = self.n
        out = {}
        for key1, c1 in self.terms.items():
            alpha1, beta1 = key1[:n], key1[n:]
            for key2, c2 in other.terms.items():
                gamma2, delta2 = key2[:n], key2[n:]
                c = c1 * c2
                for nu in iter_product(*(range(min(b, g) + 1) for b, g in zip(beta1, gamma2))):
                    w = 1
                    for b, g, v in zip(beta1, gamma2, nu):
                        w *= comb(b, v) * comb(g, v) * factorial(v)
                    key = (
                        vec_sub(vec_add(alpha1, gamma2), nu)
                        + vec_add(vec_sub(beta1, nu), delta2)
                    )
                    acc = out.get(key)
                    s = w * c if acc is None else acc + w * c
                    if s == 0:
                        out.pop(key, None)
                    else:
                        out[key] = s
        return WeylOperator(n, out)

    def __rmul__(self, other):
        # only scalars reach here; scalar multiplication is central
        return self.scale(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("operator powers must be natural numbers")
        if k == 0:
            one = Fraction(1)
            for c in self.terms.values():
                one = c / c
                break
            return WeylOperator.constant(self.n, one)
        acc = self
        for _ in range(k - 1):
            acc = acc * self
        return acc

    def apply(self, f: "Polynomial") -> "Polynomial":
        """Act on a polynomial: D_i differentiates, x_i multiplies."""
        if self.n != f.n:
            raise ValueError("variable count mismatch")
        n = self.n
        out = {}
        for key, c in self.terms.items():
            alpha, beta = key[:n], key[n:]
            for mono, fc in f.terms.items():
                if not vec_leq(beta, mono):
                    continue
                w = 1
                for m, b in zip(mono, beta):
                    w *= perm(m, b)
                target = vec_add(vec_sub(mono, beta), alpha)
                acc = out.get(target)
                s = w * c * fc if acc is None else acc + w * c * fc
                if s == 0:
                    out.pop(target, None)
                else:
                    out[target] = s
        return Polynomial(n, out)

    def __str__(self):
        return format_terms(self.terms, self.n, homog=False)

    def __repr__(self):
        return f"<WeylOperator n={self.n}: {self}>"


class HomogOperator:
    """Element of the graded algebra with central t and D_i x_i = x_i D_i + t^2."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.terms = _clean_terms(dict(terms or {}), 2 * n + 1, "graded operator")

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * (2 * n + 1): c})

    @classmethod
    def t(cls, n, k=1, coeff=1):
        return cls(n, {(k,) + (0,) * (2 * n): coeff})

    @classmethod
    def x(cls, n, i, coeff=1):
        key = tuple(1 if j == i else 0 for j in range(2 * n + 1))
        return cls(n, {key: coeff})

    @classmethod
    def d(cls, n, i, coeff=1):
        key = tuple(1 if j == n + i else 0 for j in range(2 * n + 1))
        return cls(n, {key: coeff})

    @classmethod
    def monomial(cls, n, key, coeff=1):
        return cls(n, {tuple(key): coeff})

    def is_zero(self):
        return not self.terms

    def _same_algebra(self, other):
        if self.n != other.n:
            raise ValueError("variable count mismatch")

    def support(self):
        return set(self.terms)

    def t_shift(self, j):
        """Multiply by t^j (t is central, so this just raises every k)."""
        if j < 0:
            raise ValueError("t powers are natural")
        return HomogOperator(self.n, {(k[0] + j,) + k[1:]: c for k, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, HomogOperator)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, HomogOperator):
            return NotImplemented
        self._same_algebra(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key)
            s = coeff if acc is None else acc + coeff
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return HomogOperator(self.n, out)

    def __neg__(self):
        return HomogOperator(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HomogOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return HomogOperator.zero(self.n)
        return HomogOperator(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, HomogOperator):
            return self.scale(other)
        self._same_algebra(other)
        n = self.n
        out = {}
        for key1, c1 in self.terms.items():
            k1, alpha1, beta1 = key1[0], key1[1 : n + 1], key1[n + 1 :]
            for key2, c2 in other.terms.items():
                k2, gamma2, delta2 = key2[0], key2[1 : n + 1], key2[n + 1 :]
                c = c1 * c2
                for nu in iter_product(*(range(min(b, g) + 1) for b, g in zip(beta1, gamma2))):
                    w = 1
                    for b, g, v in zip(beta1, gamma2, nu):
                        w *= comb(b, v) * comb(g, v) * factorial(v)
                    key = (
                        (k1 + k2 + 2 * sum(nu),)
                        + vec_sub(vec_add(alpha1, gamma2), nu)
                        + vec_add(vec_sub(beta1, nu), delta2)
                    )
                    acc = out.get(key)
                    s = w * c if acc is None else acc + w * c
                    if s == 0:
                        out.pop(key, None)
                    else:
                        out[key] = s
        return HomogOperator(n, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("operator powers must be natural numbers")
        if k == 0:
            one = Fraction(1)
            for c in self.terms.values():
                one = c / c
                break
            return HomogOperator.constant(self.n, one)
        acc = self
        for _ in range(k - 1):
            acc = acc * self
        return acc

    def __str__(self):
        return format_terms(self.terms, self.n, homog=True)

    def __repr__(self):
        return f"<HomogOperator n={self.n}: {self}>"


class Polynomial:
    """Sparse polynomial in x_1..x_n; the carrier of the operator action."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.terms = _clean_terms(dict(terms or {}), n, "polynomial")

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def x(cls, n, i, power=1, coeff=1):
        key = tuple(power if j == i - 1 else 0 for j in range(n))
        return cls(n, {key: coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key)
            s = coeff if acc is None else acc + coeff
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return Polynomial(self.n, out)

    def __neg__(self):
        return Polynomial(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return Polynomial.zero(self.n)
        return Polynomial(self.n, {k: c * v for k, v in self.terms.items()})

    def __str__(self):
        parts = []
        for key in sorted(self.terms, key=lambda k: (sum(k), k), reverse=True):
            factors = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(key) if e]
            body = "*".join(factors)
            parts.append((str(self.terms[key]), body))
        return _join_parts(parts)

    def __repr__(self):
        return f"<Polynomial n={self.n}: {self}>"


def _join_parts(parts):
    """Join (coefficient-string, monomial-body) pairs into an expression."""
    if not parts:
        return "0"
    chunks = []
    for coeff, body in parts:
        neg = coeff.startswith("-")
        mag = coeff[1:] if neg else coeff
        if body and mag == "1":
            text = body
        elif body:
            text = f"{mag}*{body}"
        else:
            text = mag
        if not chunks:
            chunks.append(("-" if neg else "") + text)
        else:
            chunks.append(("- " if neg else "+ ") + text)
    return " ".join(chunks)


def format_terms(terms, n, homog, sort_key=None):
    """Render a term map in expression syntax, largest term first.

    ``sort_key`` maps an exponent key to a sortable value; the default is
    degree-then-lex, which is deterministic but ignores any weight order.
    """
    if sort_key is None:
        sort_key = lambda key: (sum(key), key)
    parts = []
    for key in sorted(terms, key=sort_key, reverse=True):
        if homog:
            k, alpha, beta = key[0], key[1 : n + 1], key[n + 1 :]
        else:
            k, alpha, beta = 0, key[:n], key[n:]
        factors = []
        if k:
            factors.append("t" + (f"^{k}" if k > 1 else ""))
        for i, e in enumerate(alpha):
            if e:
                factors.append(f"x{i + 1}" + (f"^{e}" if e > 1 else ""))
        for i, e in enumerate(beta):
            if e:
                factors.append(f"D{i + 1}" + (f"^{e}" if e > 1 else ""))
        parts.append((str(terms[key]), "*".join(factors)))
    return _join_parts(parts)

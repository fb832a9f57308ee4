"""
Sparse exact polynomials in p = pi^2 and x_k = L_k^2.

A monomial is stored as a flat tuple ``(p_exp, x_1, ..., x_n)`` of
non-negative exponents.  pi itself is never represented numerically, so the
formal evaluation L_k = 2*pi*i becomes the rational substitution x_k -> -4p.
"""
from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from more_itertools import distinct_permutations

from .arith import as_rational

__all__ = [
    "Monomial",
    "VolumePolynomial",
    "PolynomialError",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_derivative_x",
    "poly_integrate_L",
    "substitute_2pi_i",
    "eval_numeric",
    "to_monomial_symmetric",
    "from_monomial_symmetric",
    "check_stable",
]

Monomial = Tuple[int, ...]
SymmetricTerm = Tuple[Tuple[int, ...], Fraction, int]


class PolynomialError(ValueError):
    """Raised for malformed polynomial input or a broken volume invariant."""


def check_stable(g: int, n: int) -> None:
    """Reject (g, n) with 2 - 2g - n >= 0."""
    if g < 0 or n < 0:
        raise PolynomialError(f"negative genus or boundary count: ({g}, {n})")
    if 2 - 2 * g - n >= 0:
        raise PolynomialError(f"(g, n) = ({g}, {n}) is unstable: need 2g - 2 + n > 0")


def monomial_key(m: Monomial) -> Tuple:
    # graded lexicographic on (p_exp, x_exps)
    return (sum(m), m)


def _sup(k: int) -> str:
    return str(k).translate(str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻"))


def format_pi_coeff(c: Fraction, d: int) -> str:
    """Render c * pi^(2d) the way the volume tables do, e.g. ``13π⁴/24``."""
    num, den = abs(c.numerator), c.denominator
    sign = "-" if c < 0 else ""
    if d == 0:
        body = f"{num}" if den == 1 else f"{num}/{den}"
        return sign + body
    pi = "π" + _sup(2 * d)
    head = pi if num == 1 else f"{num}{pi}"
    return sign + (head if den == 1 else f"{head}/{den}")


class VolumePolynomial:
    """Immutable sparse polynomial in p and x_1..x_n, tagged with (g, n).

    ``g`` is None for polynomials that are not volumes themselves (kernels,
    partial sums, 2*pi*i substitutions).
    """

    __slots__ = ("n", "g", "_terms")

    def __init__(self, terms: Mapping[Monomial, object], n: int, g: Optional[int] = None):
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in terms.items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n + 1:
                raise PolynomialError(f"monomial {mono} does not have {n} x-exponents")
            if any(e < 0 for e in mono):
                raise PolynomialError(f"negative exponent in {mono}")
            c = as_rational(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self._terms = {m: clean[m] for m in sorted(clean, key=monomial_key) if clean[m]}
        self.n = n
        self.g = g

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], n: int, g: Optional[int] = None) -> "VolumePolynomial":
        # trusted constructor: terms already validated; zero pruning and ordering only
        obj = cls.__new__(cls)
        obj._terms = {m: terms[m] for m in sorted(terms, key=monomial_key) if terms[m]}
        obj.n = n
        obj.g = g
        return obj

    @classmethod
    def zero(cls, n: int, g: Optional[int] = None) -> "VolumePolynomial":
        return cls._raw({}, n, g)

    @classmethod
    def constant(cls, c, n: int, g: Optional[int] = None) -> "VolumePolynomial":
        return cls({(0,) * (n + 1): c}, n, g)

    @classmethod
    def x(cls, k: int, n: int) -> "VolumePolynomial":
        mono = [0] * (n + 1)
        mono[k] = 1
        return cls({tuple(mono): 1}, n)

    @classmethod
    def p(cls, n: int) -> "VolumePolynomial":
        return cls({(1,) + (0,) * n: 1}, n)

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def with_genus(self, g: Optional[int]) -> "VolumePolynomial":
        return VolumePolynomial._raw(dict(self._terms), self.n, g)

    # --- ring operations -------------------------------------------------

    def _check_n(self, other: "VolumePolynomial") -> None:
        if other.n != self.n:
            raise PolynomialError(f"mismatched variable counts: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, VolumePolynomial):
            other = VolumePolynomial.constant(other, self.n)
        self._check_n(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return VolumePolynomial._raw(out, self.n)

    __radd__ = __add__

    def __neg__(self):
        return VolumePolynomial._raw({m: -c for m, c in self._terms.items()}, self.n)

    def __sub__(self, other):
        if not isinstance(other, VolumePolynomial):
            other = VolumePolynomial.constant(other, self.n)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, VolumePolynomial):
            c = as_rational(other)
            return VolumePolynomial._raw({m: c * v for m, v in self._terms.items()}, self.n)
        self._check_n(other)
        out: Dict[Monomial, Fraction] = defaultdict(Fraction)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                out[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
        return VolumePolynomial._raw(dict(out), self.n)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, VolumePolynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == VolumePolynomial.constant(other, self.n)._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, tuple(self._terms.items())))

    # --- calculus ----------------------------------------------------------

    def _check_index(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise IndexError(f"variable index {k} out of range 1..{self.n}")

    def derivative_x(self, k: int) -> "VolumePolynomial":
        """Formal d/dx_k."""
        self._check_index(k)
        out = {}
        for m, c in self._terms.items():
            a = m[k]
            if a:
                out[m[:k] + (a - 1,) + m[k + 1:]] = c * a
        return VolumePolynomial._raw(out, self.n)

    def integrate_L(self, k: int) -> "VolumePolynomial":
        """int_0^{L_k} L_k P dL_k, i.e. x_k^a -> x_k^(a+1) / (2a+2)."""
        self._check_index(k)
        out = {}
        for m, c in self._terms.items():
            a = m[k]
            out[m[:k] + (a + 1,) + m[k + 1:]] = c / (2 * a + 2)
        return VolumePolynomial._raw(out, self.n)

    def substitute_2pi_i(self, k: int) -> "VolumePolynomial":
        """Set L_k = 2*pi*i (x_k -> -4p) and drop variable k."""
        self._check_index(k)
        out: Dict[Monomial, Fraction] = defaultdict(Fraction)
        for m, c in self._terms.items():
            a = m[k]
            out[(m[0] + a,) + m[1:k] + m[k + 1:]] += c * (-4) ** a
        return VolumePolynomial._raw(dict(out), self.n - 1)

    def substitute_x(self, k: int, value) -> "VolumePolynomial":
        """Set x_k to a rational constant and drop variable k."""
        self._check_index(k)
        v = as_rational(value)
        out: Dict[Monomial, Fraction] = defaultdict(Fraction)
        for m, c in self._terms.items():
            out[m[:k] + m[k + 1:]] += c * v ** m[k]
        return VolumePolynomial._raw(dict(out), self.n - 1)

    def euler_x(self) -> "VolumePolynomial":
        """sum_k L_k dP/dL_k, which in x-form is sum_k 2 x_k dP/dx_k."""
        out = {}
        for m, c in self._terms.items():
            w = 2 * sum(m[1:])
            if w:
                out[m] = c * w
        return VolumePolynomial._raw(out, self.n)

    def permute(self, perm: Sequence[int]) -> "VolumePolynomial":
        """Relabel variables: new x_{i+1} is old x_{perm[i]} (1-based entries)."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise PolynomialError(f"{perm} is not a permutation of 1..{self.n}")
        out = {(m[0],) + tuple(m[j] for j in perm): c for m, c in self._terms.items()}
        return VolumePolynomial._raw(out, self.n, self.g)

    # --- evaluation ---------------------------------------------------------

    def eval_numeric(self, L: Sequence[float], pi_value: float = math.pi) -> float:
        if len(L) != self.n:
            raise PolynomialError(f"expected {self.n} lengths, got {len(L)}")
        xs = [float(l) ** 2 for l in L]
        p = float(pi_value) ** 2
        total = 0.0
        for m, c in self._terms.items():
            t = float(c) * p ** m[0]
            for xv, e in zip(xs, m[1:]):
                t *= xv ** e
            total += t
        return total

    def constant_term(self) -> Dict[int, Fraction]:
        """Value at L = 0 as {p_exp: coefficient}."""
        out: Dict[int, Fraction] = {}
        for m, c in self._terms.items():
            if not any(m[1:]):
                out[m[0]] = out.get(m[0], 0) + c
        return out

    def at_zero(self) -> Tuple[Fraction, int]:
        """V(0) = c * p^d for a homogeneous volume; returns (c, d)."""
        ct = self.constant_term()
        if not ct:
            return Fraction(0), 0
        if len(ct) != 1:
            raise PolynomialError("constant term is not a single power of p")
        (d, c), = ct.items()
        return c, d

    # --- invariants ---------------------------------------------------------

    def homogeneity_violation(self, degree: int) -> Optional[Monomial]:
        for m in self._terms:
            if sum(m) != degree:
                return m
        return None

    def symmetry_violation(self) -> Optional[Tuple[int, int]]:
        """First adjacent transposition (i, i+1) that changes the polynomial."""
        for i in range(1, self.n):
            for m, c in self._terms.items():
                sw = list(m)
                sw[i], sw[i + 1] = sw[i + 1], sw[i]
                if self._terms.get(tuple(sw)) != c:
                    return (i, i + 1)
        return None

    def negative_monomial(self) -> Optional[Monomial]:
        for m, c in self._terms.items():
            if c < 0:
                return m
        return None

    def check_volume_invariants(self, g: int, n: int) -> None:
        """Raise PolynomialError unless homogeneous of degree 3g-3+n, symmetric, nonnegative."""
        if self.n != n:
            raise PolynomialError(f"V_{g},{n} has {self.n} variables")
        bad = self.homogeneity_violation(3 * g - 3 + n)
        if bad is not None:
            raise PolynomialError(f"V_{g},{n} not homogeneous of degree {3 * g - 3 + n}: {bad}")
        pair = self.symmetry_violation()
        if pair is not None:
            raise PolynomialError(f"V_{g},{n} not symmetric under swapping x_{pair[0]}, x_{pair[1]}")
        neg = self.negative_monomial()
        if neg is not None:
            raise PolynomialError(f"V_{g},{n} has a negative coefficient at {neg}")

    # --- symmetric basis ----------------------------------------------------

    def to_monomial_symmetric(self) -> List[SymmetricTerm]:
        """Regroup into orbit sums m_(lambda).

        Returns ``(partition, coefficient, p_exp)`` triples, highest L-degree
        first and larger partitions first within a degree.
        """
        pair = self.symmetry_violation()
        if pair is not None:
            raise PolynomialError(f"polynomial is not symmetric: swapping x_{pair[0]}, x_{pair[1]} changes it")
        out = []
        for m, c in self._terms.items():
            xs = m[1:]
            if list(xs) == sorted(xs, reverse=True):
                part = tuple(e for e in xs if e)
                out.append((part, c, m[0]))
        out.sort(key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
        return out

    def to_human(self) -> str:
        """Render in monomial-symmetric form, e.g. ``1/48 m_(1) + π²/12``."""
        if not self._terms:
            return "0"
        pieces = []
        for part, c, d in self.to_monomial_symmetric():
            coeff = format_pi_coeff(abs(c), d)
            if part:
                tag = "m_(" + ",".join(map(str, part)) + ")"
                body = tag if coeff == "1" else f"{coeff} {tag}"
            else:
                body = coeff
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    # --- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "terms": [
                {"p": m[0], "x": list(m[1:]), "num": str(c.numerator), "den": str(c.denominator)}
                for m, c in self._terms.items()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "VolumePolynomial":
        n = int(data["n"])
        terms = {}
        for t in data["terms"]:
            den = int(t["den"])
            if den <= 0:
                raise PolynomialError("denominators must be positive")
            terms[(int(t["p"]),) + tuple(int(e) for e in t["x"])] = Fraction(int(t["num"]), den)
        g = data.get("g")
        return cls(terms, n, None if g is None else int(g))

    def __repr__(self) -> str:
        tag = f"V[{self.g},{self.n}]" if self.g is not None else f"Poly[n={self.n}]"
        return f"{tag}({self.to_human() if self.symmetry_violation() is None else self._terms})"


def from_monomial_symmetric(entries: Iterable[Tuple[Sequence[int], object, int]], n: int,
                            g: Optional[int] = None) -> VolumePolynomial:
    """Expand ``(partition, coefficient, p_exp)`` triples back into monomials."""
    out: Dict[Monomial, Fraction] = {}
    for part, c, d in entries:
        part = tuple(e for e in part if e)
        if len(part) > n:
            raise PolynomialError(f"partition {part} longer than n = {n}")
        c = as_rational(c)
        padded = part + (0,) * (n - len(part))
        for perm in distinct_permutations(padded):
            key = (d,) + tuple(perm)
            out[key] = out.get(key, 0) + c
    return VolumePolynomial(out, n, g)


def poly_add(a: VolumePolynomial, b) -> VolumePolynomial:
    return a + b


def poly_mul(a: VolumePolynomial, b) -> VolumePolynomial:
    return a * b


def poly_scale(a: VolumePolynomial, c) -> VolumePolynomial:
    return a * as_rational(c)


def poly_derivative_x(P: VolumePolynomial, k: int) -> VolumePolynomial:
    return P.derivative_x(k)


def poly_integrate_L(P: VolumePolynomial, k: int) -> VolumePolynomial:
    return P.integrate_L(k)


def substitute_2pi_i(P: VolumePolynomial, k: int) -> VolumePolynomial:
    return P.substitute_2pi_i(k)


def eval_numeric(P: VolumePolynomial, L: Sequence[float], pi_value: float = math.pi) -> float:
    return P.eval_numeric(L, pi_value)


def to_monomial_symmetric(P: VolumePolynomial) -> List[SymmetricTerm]:
    return P.to_monomial_symmetric()

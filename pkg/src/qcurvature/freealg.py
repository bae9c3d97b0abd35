"""Free operator algebra generated by d and the multiplication operators e_j.

e_j stands for left multiplication by the j-th derivative of the degree-one
element a, so e_j carries degree j + 1 and the graded Leibniz rule gives the
single rewrite

    d * e_j  ->  e_{j+1} + q^(j+1) * e_j * d.

Normal ordering moves every d to the right of every e_j.  Expanding powers
of d + e_0 in this algebra is the brute-force oracle against which the
weighted-path model is validated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import groupby
from typing import Iterable

from .cyclo import ONE, ZERO, CycloModulus, QPoly
from .paths import Comp

Generator = str | int  # "d", or an integer j standing for e_j


@dataclass(frozen=True)
class Monomial:
    """A word e_{s_1} * ... * e_{s_n}, encoded by its composition vector.

    The empty word is the scalar unit.  The degree of the word is the entry
    sum plus the length, since each factor e_j has degree j + 1.
    """

    comp: Comp = Comp(())

    @classmethod
    def from_entries(cls, *entries: int) -> Monomial:
        return cls(Comp(tuple(entries)))

    def degree(self) -> int:
        return self.comp.total() + len(self.comp)

    def __len__(self) -> int:
        return len(self.comp)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(Comp(self.comp.entries + other.comp.entries))

    def text(self) -> str:
        if not self.comp.entries:
            return "1"
        parts = []
        for j, run in groupby(self.comp.entries):
            count = len(list(run))
            base = "a" if j == 0 else ("d(a)" if j == 1 else f"d^{j}(a)")
            parts.append(base if count == 1 else f"{base}^{count}")
        return "*".join(parts)

    def latex(self) -> str:
        if not self.comp.entries:
            return "1"
        parts = []
        for j, run in groupby(self.comp.entries):
            count = len(list(run))
            base = "a" if j == 0 else ("d_M(a)" if j == 1 else f"d_M^{{{j}}}(a)")
            if count == 1:
                parts.append(base)
            elif j == 0:
                parts.append(f"a^{{{count}}}")
            else:
                parts.append(f"({base})^{{{count}}}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self.comp.entries!r})"


UNIT = Monomial()


@dataclass(frozen=True)
class Term:
    """One normally ordered summand: coefficient * word * d^dpow."""

    coeff: QPoly
    mono: Monomial
    dpow: int


def _term_key(item: tuple[tuple[Monomial, int], QPoly]) -> tuple:
    (mono, dpow), _ = item
    return (-dpow, mono.comp.sort_key())


class OperatorPoly:
    """Finite sum of coefficient * word * d^k in normal form.

    Zero coefficients are never stored; multiplication triggers normal
    ordering via the Leibniz rewrite.  Instances are immutable by
    convention: no method mutates, all return fresh objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[Monomial, int], QPoly] | None = None):
        self._terms = {
            key: coeff for key, coeff in (terms or {}).items() if not coeff.is_zero()
        }

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls) -> OperatorPoly:
        return cls()

    @classmethod
    def one(cls) -> OperatorPoly:
        return cls({(UNIT, 0): ONE})

    @classmethod
    def d(cls) -> OperatorPoly:
        return cls({(UNIT, 1): ONE})

    @classmethod
    def e(cls, j: int) -> OperatorPoly:
        if j < 0:
            raise ValueError("derivative order must be nonnegative")
        return cls({(Monomial.from_entries(j), 0): ONE})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Monomial, int, QPoly]]) -> OperatorPoly:
        acc: dict[tuple[Monomial, int], QPoly] = {}
        for mono, dpow, coeff in terms:
            key = (mono, dpow)
            acc[key] = acc.get(key, ZERO) + coeff
        return cls(acc)

    # -- inspection -----------------------------------------------------

    def terms(self) -> list[Term]:
        """Summands in canonical order: dpow descending, then word order."""
        return [
            Term(coeff, mono, dpow)
            for (mono, dpow), coeff in sorted(self._terms.items(), key=_term_key)
        ]

    def coefficient(self, mono: Monomial, dpow: int) -> QPoly:
        return self._terms.get((mono, dpow), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def filtered(self, keep) -> OperatorPoly:
        """Sub-sum of the terms for which keep(mono, dpow) holds."""
        return OperatorPoly(
            {key: c for key, c in self._terms.items() if keep(key[0], key[1])}
        )

    def dpow_zero_part(self) -> ElementPoly:
        return ElementPoly(self.filtered(lambda mono, dpow: dpow == 0))

    def max_dpow(self) -> int:
        return max((dpow for (_, dpow) in self._terms), default=0)

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: OperatorPoly) -> OperatorPoly:
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, ZERO) + coeff
        return OperatorPoly(acc)

    def __neg__(self) -> OperatorPoly:
        return OperatorPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: OperatorPoly) -> OperatorPoly:
        return self + (-other)

    def scaled(self, factor: QPoly | int) -> OperatorPoly:
        if isinstance(factor, int):
            factor = QPoly((factor,))
        return OperatorPoly({key: c * factor for key, c in self._terms.items()})

    def __mul__(self, other: OperatorPoly) -> OperatorPoly:
        acc: dict[tuple[Monomial, int], QPoly] = {}
        for (mono_a, dpow_a), coeff_a in self._terms.items():
            pushed = other
            for _ in range(dpow_a):
                pushed = _d_times(pushed)
            for (mono_b, dpow_b), coeff_b in pushed._terms.items():
                key = (mono_a * mono_b, dpow_b)
                acc[key] = acc.get(key, ZERO) + coeff_a * coeff_b
        return OperatorPoly(acc)

    def __pow__(self, n: int) -> OperatorPoly:
        if n < 0:
            raise ValueError("negative operator powers are not defined")
        result = OperatorPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # mutable-container internals; equality is structural

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_term_text(t) for t in self.terms())

    def __repr__(self) -> str:
        return f"OperatorPoly('{self}')"


def _term_text(term: Term) -> str:
    body = []
    if len(term.mono):
        body.append(term.mono.text())
    if term.dpow == 1:
        body.append("d")
    elif term.dpow > 1:
        body.append(f"d^{term.dpow}")
    cstr = term.coeff.compact()
    if not body:
        return cstr
    if cstr != "1":
        if "+" in cstr or "-" in cstr:
            cstr = f"({cstr})"
        body.insert(0, cstr)
    return "*".join(body)


@cache
def _word_rewrite(comp: Comp) -> OperatorPoly:
    """Normal form of d times the word with exponent vector ``comp``.

    Recursive application of the single rewrite rule; the closed prefix-sum
    formula is *not* used here, so this stays an independent route.
    """
    if not comp.entries:
        return OperatorPoly.d()
    head, rest = comp.entries[0], Comp(comp.entries[1:])
    bumped = OperatorPoly({(Monomial(Comp((head + 1,) + rest.entries)), 0): ONE})
    passed = OperatorPoly(
        {
            (Monomial(Comp((head,) + mono.comp.entries)), dpow): coeff
            * QPoly.monomial(head + 1)
            for (mono, dpow), coeff in _word_rewrite(rest)._terms.items()
        }
    )
    return bumped + passed


def _d_times(op: OperatorPoly) -> OperatorPoly:
    """Left multiplication by the single generator d."""
    acc: dict[tuple[Monomial, int], QPoly] = {}
    for (mono, dpow), coeff in op._terms.items():
        for (mono2, extra), weight in _word_rewrite(mono.comp)._terms.items():
            key = (mono2, dpow + extra)
            acc[key] = acc.get(key, ZERO) + coeff * weight
    return OperatorPoly(acc)


def normal_order(word: Iterable[Generator]) -> OperatorPoly:
    """Normal form of a product of generators.

    Each item is either the string ``"d"`` or an integer j standing for
    e_j.  The result is independent of the rewrite order (confluence is
    exercised by the associativity tests).

    >>> print(normal_order(["d", 0]))
    q*a*d + d(a)
    """
    result = OperatorPoly.one()
    for g in word:
        if g == "d":
            result = result * OperatorPoly.d()
        elif isinstance(g, int):
            result = result * OperatorPoly.e(g)
        else:
            raise ValueError(f"unknown generator {g!r}")
    return result


class ElementPoly:
    """A formal element of the module: an operator sum with no d factors."""

    __slots__ = ("_op",)

    def __init__(self, op: OperatorPoly):
        if any(dpow != 0 for (_, dpow) in op._terms):
            raise ValueError("element polynomials cannot carry d factors")
        self._op = op

    @classmethod
    def zero(cls) -> ElementPoly:
        return cls(OperatorPoly.zero())

    @classmethod
    def from_word(cls, *entries: int) -> ElementPoly:
        return cls(OperatorPoly({(Monomial.from_entries(*entries), 0): ONE}))

    @classmethod
    def a(cls) -> ElementPoly:
        """The deforming element itself, the word with single entry 0."""
        return cls.from_word(0)

    def items(self) -> list[tuple[Monomial, QPoly]]:
        return [(t.mono, t.coeff) for t in self._op.terms()]

    def coefficient(self, mono: Monomial) -> QPoly:
        return self._op.coefficient(mono, 0)

    def is_zero(self) -> bool:
        return self._op.is_zero()

    def __add__(self, other: ElementPoly) -> ElementPoly:
        return ElementPoly(self._op + other._op)

    def __sub__(self, other: ElementPoly) -> ElementPoly:
        return ElementPoly(self._op - other._op)

    def scaled(self, factor: QPoly | int) -> ElementPoly:
        return ElementPoly(self._op.scaled(factor))

    def times_d_power(self, dpow: int) -> OperatorPoly:
        """The operator (this element) * d^dpow; already normally ordered."""
        if dpow < 0:
            raise ValueError("dpow must be nonnegative")
        return OperatorPoly(
            {(mono, dpow): coeff for (mono, _), coeff in self._op._terms.items()}
        )

    def to_operator(self) -> OperatorPoly:
        return self.times_d_power(0)

    def reduce_mod(self, modulus: CycloModulus) -> ElementPoly:
        reduced = {
            key: modulus.reduce(coeff) for key, coeff in self._op._terms.items()
        }
        return ElementPoly(OperatorPoly(reduced))

    def truncated(self, max_order: int) -> ElementPoly:
        """Drop every word containing a derivative of order >= max_order."""
        return ElementPoly(
            self._op.filtered(
                lambda mono, _dpow: all(j < max_order for j in mono.comp.entries)
            )
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementPoly):
            return NotImplemented
        return self._op == other._op

    __hash__ = None

    def __str__(self) -> str:
        return str(self._op)

    def __repr__(self) -> str:
        return f"ElementPoly('{self}')"


def q_derivative(p: ElementPoly) -> ElementPoly:
    """Graded Leibniz derivative on element polynomials.

    Each word picks up one term per factor: the factor's order is raised
    and the term is weighted by q to the degree of everything to its left.
    """
    acc: dict[tuple[Monomial, int], QPoly] = {}
    for mono, coeff in p.items():
        entries = mono.comp.entries
        left_degree = 0
        for i, entry in enumerate(entries):
            raised = Monomial(Comp(entries[:i] + (entry + 1,) + entries[i + 1 :]))
            key = (raised, 0)
            acc[key] = acc.get(key, ZERO) + coeff * QPoly.monomial(left_degree)
            left_degree += entry + 1
    return ElementPoly(OperatorPoly(acc))


def multiply_by_a(p: ElementPoly) -> ElementPoly:
    """Left multiplication by the deforming element: prepend a to each word."""
    acc = {
        (Monomial(mono.comp.prepended()), 0): coeff for mono, coeff in p.items()
    }
    return ElementPoly(OperatorPoly(acc))


@cache
def deformed_power(n: int) -> OperatorPoly:
    """Normal form of (d + e_0)^n over generic q.

    The pure d^n term is kept: nothing is truncated at this level.

    >>> print(deformed_power(2))
    d^2 + (1+q)*a*d + d(a) + a^2
    """
    if n < 1:
        raise ValueError("n must be positive")
    base = OperatorPoly.d() + OperatorPoly.e(0)
    if n == 1:
        return base
    return deformed_power(n - 1) * base


@cache
def deformed_power_first_order(n: int) -> OperatorPoly:
    """Coefficient of t in (d + t*e_0)^n with t squaring to zero.

    Computed by tracking the nilpotent grade through the multiplication,
    not by filtering :func:`deformed_power`, so it is an independent route.
    """
    if n < 1:
        raise ValueError("n must be positive")
    base0, base1 = OperatorPoly.d(), OperatorPoly.e(0)
    part0, part1 = base0, base1
    for _ in range(n - 1):
        part0, part1 = part0 * base0, part0 * base1 + part1 * base0
    return part1


@cache
def maurer_cartan_element(n: int) -> ElementPoly:
    """The element obtained by applying the deformed differential n-1 times to a.

    Defined by the recursion  M(1) = a,  M(n+1) = dM(n) + a*M(n).  Its
    reduction at an n-th root of unity is the full obstruction to the
    deformed differential having vanishing n-th power.

    >>> print(maurer_cartan_element(2))
    d(a) + a^2
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return ElementPoly.a()
    previous = maurer_cartan_element(n - 1)
    return q_derivative(previous) + multiply_by_a(previous)

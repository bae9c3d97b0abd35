"""Curvature expansions of the deformed differential, and their cross-checks.

The n-th power of the deformed differential d + a expands as a sum of
element coefficients times powers of d.  This module assembles that
expansion three independent ways (weighted path model, direct operator
expansion, q-binomial recursion formula), reduces it at roots of unity,
extracts the first-order (infinitesimal) coefficients, and packages all
pairwise consistency checks into a verification report.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterator

from .cyclo import ONE, ZERO, CycloModulus, QPoly, coeffs_list, poly_from_coeffs, q_binomial
from .freealg import (
    ElementPoly,
    Monomial,
    OperatorPoly,
    deformed_power,
    deformed_power_first_order,
    maurer_cartan_element,
)
from .paths import Comp, WeightRule, enumerate_vertices, path_sum_dp, path_sum_enum, stay_count

GENERIC = "generic"
ROOT = "root"


@dataclass(frozen=True, eq=True)
class CurvatureExpansion:
    """Expansion of the n-th deformed power as sum of c_k * d^k.

    In generic mode k runs 0..n and c_n is the scalar 1 (the all-stay
    path at the empty vertex).  In root-of-unity mode k runs 0..n-1, every
    coefficient is reduced modulo the n-th cyclotomic polynomial, words
    containing a derivative of order >= n are dropped, and vanished
    coefficients are removed from the map.
    """

    n: int
    mode: str
    rule: WeightRule
    c: dict[int, ElementPoly]

    def coefficient(self, k: int) -> ElementPoly:
        return self.c.get(k, ElementPoly.zero())

    def powers(self) -> list[int]:
        return sorted(self.c, reverse=True)

    def as_operator(self) -> OperatorPoly:
        total = OperatorPoly.zero()
        for k, element in self.c.items():
            total = total + element.times_d_power(k)
        return total

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "rule": self.rule.value,
            "c": [
                {
                    "k": k,
                    "terms": [
                        {"s": list(mono.comp.entries), "coeff": coeffs_list(coeff)}
                        for mono, coeff in self.c[k].items()
                    ],
                }
                for k in self.powers()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> CurvatureExpansion:
        c: dict[int, ElementPoly] = {}
        for entry in data["c"]:
            terms = {
                (Monomial(Comp(tuple(item["s"]))), 0): poly_from_coeffs(item["coeff"])
                for item in entry["terms"]
            }
            c[int(entry["k"])] = ElementPoly(OperatorPoly(terms))
        return cls(
            n=int(data["n"]),
            mode=data["mode"],
            rule=WeightRule(data["rule"]),
            c=c,
        )


def path_expansion(n: int, rule: WeightRule | None = None) -> CurvatureExpansion:
    """Generic-mode expansion assembled from weighted path sums.

    Every vertex reachable in n steps contributes its path sum as the
    coefficient of its word, attached to d^(number of stay steps).
    """
    if n < 1:
        raise ValueError("n must be positive")
    rule = rule if rule is not None else resolve_default_rule()
    c: dict[int, dict] = {}
    for s in enumerate_vertices(n):
        k = stay_count(s, n)
        weight = path_sum_dp(s, n, rule)
        if weight.is_zero():
            continue
        c.setdefault(k, {})[(Monomial(s), 0)] = weight
    coefficients = {
        k: ElementPoly(OperatorPoly(terms)) for k, terms in sorted(c.items())
    }
    return CurvatureExpansion(n=n, mode=GENERIC, rule=rule, c=coefficients)


def root_of_unity_expansion(n: int, rule: WeightRule | None = None) -> CurvatureExpansion:
    """Expansion at a primitive n-th root of unity.

    Words containing a derivative of order >= n are dropped first, then
    every coefficient is reduced modulo the n-th cyclotomic polynomial;
    coefficients that vanish are removed.
    """
    if n < 2:
        raise ValueError("root-of-unity mode needs n >= 2")
    rule = rule if rule is not None else resolve_default_rule()
    generic = path_expansion(n, rule)
    modulus = CycloModulus.of(n)
    c: dict[int, ElementPoly] = {}
    for k in range(n):
        reduced = generic.coefficient(k).truncated(n).reduce_mod(modulus)
        if not reduced.is_zero():
            c[k] = reduced
    return CurvatureExpansion(n=n, mode=ROOT, rule=rule, c=c)


def reduce_then_truncate(expansion: CurvatureExpansion) -> CurvatureExpansion:
    """Root-of-unity form computed in the opposite order (reduce, then drop).

    Truncation is coefficient-blind so this must agree with
    :func:`root_of_unity_expansion`; the verify suite asserts it.
    """
    if expansion.mode != GENERIC:
        raise ValueError("expected a generic-mode expansion")
    modulus = CycloModulus.of(expansion.n)
    c: dict[int, ElementPoly] = {}
    for k in range(expansion.n):
        swapped = expansion.coefficient(k).reduce_mod(modulus).truncated(expansion.n)
        if not swapped.is_zero():
            c[k] = swapped
    return CurvatureExpansion(expansion.n, ROOT, expansion.rule, c)


def binomial_expansion(n: int) -> OperatorPoly:
    """The n-th deformed power assembled from the q-binomial recursion formula.

    d^n plus, for k = 1..n-1, the Gaussian binomial (n choose k) times the
    (k-1)-fold deformed derivative of a times d^(n-k), plus the (n-1)-fold
    deformed derivative of a.  Must agree with :func:`deformed_power`.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    total = OperatorPoly({(Monomial(), n): ONE})
    for k in range(1, n):
        piece = maurer_cartan_element(k).times_d_power(n - k)
        total = total + piece.scaled(q_binomial(n, k))
    return total + maurer_cartan_element(n).to_operator()


# ---------------------------------------------------------------------------
# infinitesimal deformations (coefficient of t with t^2 = 0)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InfinitesimalCoefficients:
    """First-order coefficients: entry m multiplies t * d^m(e) * d^(n-1-m)."""

    n: int
    coeffs: tuple[QPoly, ...]

    def reduced(self, modulus: CycloModulus) -> InfinitesimalCoefficients:
        return InfinitesimalCoefficients(
            self.n, tuple(modulus.reduce(c) for c in self.coeffs)
        )


def _distributions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _distributions(total - head, parts - 1):
            yield (head,) + tail


def infinitesimal_coefficients(
    n: int, rule: WeightRule | None = None
) -> InfinitesimalCoefficients:
    """Path-model first-order coefficients.

    Only single-entry words survive when the deformation parameter squares
    to zero, so every contributing path climbs the spine of single-entry
    vertices; entry m sums over all ways to distribute the n-1-m stay
    steps along that spine.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rule = rule if rule is not None else resolve_default_rule()
    spine_start = Comp(())
    coeffs = []
    for m in range(n):
        spine = [spine_start] + [Comp((j,)) for j in range(m + 1)]
        move_exponent = 0  # the prepend step is weight 1
        for j in range(m):
            move_exponent += rule.increment_exponent(Comp((j,)), 1)
        stay_exponents = [rule.stay_exponent(v) for v in spine]
        total = ZERO
        for stays in _distributions(n - 1 - m, len(spine)):
            exponent = move_exponent + sum(
                count * e for count, e in zip(stays, stay_exponents)
            )
            total = total + QPoly.monomial(exponent)
        coeffs.append(total)
    return InfinitesimalCoefficients(n, tuple(coeffs))


def infinitesimal_from_operator(n: int) -> InfinitesimalCoefficients:
    """First-order coefficients extracted from the nilpotent operator power."""
    if n < 2:
        raise ValueError("n must be at least 2")
    op = deformed_power_first_order(n)
    coeffs = tuple(
        op.coefficient(Monomial.from_entries(m), n - 1 - m) for m in range(n)
    )
    return InfinitesimalCoefficients(n, coeffs)


COMPOSITION_SUM_READINGS = ("occupancy", "stay", "block")


@dataclass(frozen=True)
class CompositionSumComparison:
    """One reading of the closed composition-sum formula, checked per entry."""

    n: int
    convention: str
    values: tuple[QPoly, ...]
    reference: tuple[QPoly, ...]
    matches: tuple[bool, ...]

    def all_match(self) -> bool:
        return all(self.matches)


def infinitesimal_composition_sum(
    n: int, convention: str, rule: WeightRule | None = None
) -> CompositionSumComparison:
    """Evaluate a candidate reading of the closed first-order formula.

    The formula sums q^(|v| + sum of i*v_i) over a set of integer vectors
    attached to the spine, but the intended vector meaning is ambiguous.
    Three readings are implemented:

    - ``occupancy``: entries are occupancies (>= 1) of the m+1 nonempty
      spine vertices, summing to n; the exponent is evaluated on the
      derived stay counts (occupancy - 1); the empty vertex is never
      stayed at.
    - ``stay``: entries are stay counts (>= 0) at the m+1 nonempty spine
      vertices, any remaining stays sit at the empty vertex with weight
      one; the exponent is evaluated on the entries directly.
    - ``block``: entries are occupancies (>= 1) of the m+1 blocks starting
      at the empty vertex, so the target vertex gets no stays; the
      exponent is evaluated on the derived stay counts with the leading
      (empty-vertex) entry excluded from the plain sum.

    Every entry is compared against the path-model value; the result
    records, per entry, whether the reading reproduces it.
    """
    if convention not in COMPOSITION_SUM_READINGS:
        raise ValueError(f"unknown convention {convention!r}")
    if n < 2:
        raise ValueError("n must be at least 2")
    reference = infinitesimal_coefficients(n, rule).coeffs
    values = []
    for m in range(n):
        stays_total = n - 1 - m
        total = ZERO
        if convention == "occupancy":
            for stays in _distributions(stays_total, m + 1):
                exponent = sum(stays) + sum(i * v for i, v in enumerate(stays))
                total = total + QPoly.monomial(exponent)
        elif convention == "stay":
            for budget in range(stays_total + 1):
                for stays in _distributions(budget, m + 1):
                    exponent = sum(stays) + sum(i * v for i, v in enumerate(stays))
                    total = total + QPoly.monomial(exponent)
        else:  # block
            for stays in _distributions(stays_total, m + 1):
                exponent = sum(stays[1:]) + sum(i * v for i, v in enumerate(stays))
                total = total + QPoly.monomial(exponent)
        values.append(total)
    values_t = tuple(values)
    matches = tuple(v == r for v, r in zip(values_t, reference))
    return CompositionSumComparison(n, convention, values_t, reference, matches)


# ---------------------------------------------------------------------------
# verification suite
# ---------------------------------------------------------------------------


# The two conventions agree at n = 2 and split from n = 3 on; this range
# is fixed by design, independent of how far a verification run reports.
ARBITRATION_N_MAX = 6


@cache
def resolve_default_rule(n_max: int = ARBITRATION_N_MAX) -> WeightRule:
    """The weight rule validated against the operator oracle.

    Exactly one of the two conventions reproduces the direct operator
    expansion for every n up to n_max; that one is the shipped default.
    """
    passing = [
        rule
        for rule in (WeightRule.LITERAL, WeightRule.PREFIX)
        if all(
            path_expansion(n, rule).as_operator() == deformed_power(n)
            for n in range(2, n_max + 1)
        )
    ]
    if len(passing) != 1:
        raise RuntimeError(f"rule arbitration did not single out one rule: {passing}")
    return passing[0]


# Hand-worked weights for the four-step expansion, transcribed verbatim from
# the original derivation that this package mechanises.  The verify suite
# recomputes every entry exactly and reports each disagreement; values here
# are never used in any computation.
REFERENCE_FOUR_STEP_WEIGHTS: dict[tuple[int, ...], tuple[int, ...]] = {
    (0,): (1, 1, 1, 1),
    (1,): (1, 0, 1),
    (2,): (1, 1, 1, 1),
    (3,): (1,),
    (0, 0): (1, 0, 1),
    (1, 0): (1, 1, 1, 1),
    (0, 1): (2, 2, 2, 2),
    (2, 0): (1,),
    (0, 2): (1, 1, 1),
    (1, 1): (1, 0, 1),
    (0, 0, 0): (1, 1, 1, 1),
    (1, 0, 0): (1,),
    (0, 1, 0): (1, 1),
    (0, 0, 1): (1, 1, 1),
    (0, 0, 0, 0): (1,),
}

THREE_STEP_DISPLAY_NOTE = (
    "the closed-form display of the three-step obstruction omits the a^3 "
    "word that the per-vertex enumeration produces with coefficient 1; "
    "this package keeps it"
)


@dataclass(frozen=True)
class CheckResult:
    check: str
    n: int
    status: str  # "pass" | "fail"
    rule: str | None = None
    counterexample: dict | None = None

    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        out: dict = {"check": self.check, "n": self.n, "status": self.status}
        if self.rule is not None:
            out["rule"] = self.rule
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class ListingMismatch:
    s: tuple[int, ...]
    stated: tuple[int, ...]
    computed: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "s": list(self.s),
            "stated": list(self.stated),
            "computed": list(self.computed),
        }


@dataclass(frozen=True)
class VerifyReport:
    n_max: int
    requested_rule: str
    selected_rule: str
    checks: tuple[CheckResult, ...]
    arbitration: dict
    four_step_mismatches: tuple[ListingMismatch, ...]
    three_step_display: dict
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "requested_rule": self.requested_rule,
            "selected_rule": self.selected_rule,
            "passed": self.passed,
            "checks": [c.to_json_dict() for c in self.checks],
            "arbitration": self.arbitration,
            "reference_discrepancies": {
                "three_step_display": self.three_step_display,
                "four_step_listing": [m.to_json_dict() for m in self.four_step_mismatches],
            },
        }

    def summary_lines(self) -> list[str]:
        lines = [f"weight rule: {self.selected_rule} (requested: {self.requested_rule})"]
        for c in self.checks:
            label = c.check if c.rule is None else f"{c.check}[{c.rule}]"
            line = f"{label:<32} n={c.n:<3} {c.status.upper()}"
            if c.counterexample:
                line += f"  counterexample: {c.counterexample}"
            lines.append(line)
        arb = self.arbitration
        lines.append(
            f"arbitration: passing={arb['passing']} failing={arb['failing']} "
            f"first counterexample: {arb['counterexample']}"
        )
        lines.append(f"note: {self.three_step_display['note']}")
        if self.four_step_mismatches:
            lines.append("four-step reference listing disagreements (stated vs computed):")
            for m in self.four_step_mismatches:
                s = ",".join(str(x) for x in m.s) or "∅"
                stated = poly_from_coeffs(m.stated)
                computed = poly_from_coeffs(m.computed)
                lines.append(f"  s={s}: stated {stated}  computed {computed}")
        else:
            lines.append("four-step reference listing: no disagreements")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return lines


def _first_operator_difference(
    n: int, left: OperatorPoly, right: OperatorPoly
) -> dict | None:
    keys = {(t.mono, t.dpow) for t in left.terms()} | {
        (t.mono, t.dpow) for t in right.terms()
    }
    for mono, dpow in sorted(keys, key=lambda k: (-k[1], k[0].comp.sort_key())):
        a = left.coefficient(mono, dpow)
        b = right.coefficient(mono, dpow)
        if a != b:
            return {
                "n": n,
                "s": list(mono.comp.entries),
                "dpow": dpow,
                "path_value": coeffs_list(a),
                "oracle_value": coeffs_list(b),
            }
    return None


def _check_oracle_equivalence(n: int, rule: WeightRule) -> CheckResult:
    left = path_expansion(n, rule).as_operator()
    right = deformed_power(n)
    difference = _first_operator_difference(n, left, right)
    status = "pass" if difference is None else "fail"
    return CheckResult("oracle-equivalence", n, status, rule.value, difference)


def _check_maurer_cartan(n: int, rule: WeightRule) -> CheckResult:
    expansion = root_of_unity_expansion(n, rule)
    modulus = CycloModulus.of(n)
    for k in range(1, n):
        coeff = expansion.coefficient(k)
        if not coeff.is_zero():
            mono, value = coeff.items()[0]
            bad = {"n": n, "k": k, "s": list(mono.comp.entries), "value": coeffs_list(value)}
            return CheckResult("maurer-cartan", n, "fail", rule.value, bad)
    expected = maurer_cartan_element(n).truncated(n).reduce_mod(modulus)
    if expansion.coefficient(0) != expected:
        diff = _first_operator_difference(
            n, expansion.coefficient(0).to_operator(), expected.to_operator()
        )
        return CheckResult("maurer-cartan", n, "fail", rule.value, diff)
    return CheckResult("maurer-cartan", n, "pass", rule.value)


def _check_binomial_formula(n: int) -> CheckResult:
    difference = _first_operator_difference(n, binomial_expansion(n), deformed_power(n))
    status = "pass" if difference is None else "fail"
    return CheckResult("binomial-formula", n, status, None, difference)


def _check_infinitesimal(n: int, rule: WeightRule) -> CheckResult:
    modulus = CycloModulus.of(n)
    path_side = infinitesimal_coefficients(n, rule)
    operator_side = infinitesimal_from_operator(n)
    for m in range(n):
        expected = q_binomial(n, m + 1)
        entry = path_side.coeffs[m]
        if entry != operator_side.coeffs[m] or entry != expected:
            bad = {
                "n": n,
                "m": m,
                "path_value": coeffs_list(entry),
                "operator_value": coeffs_list(operator_side.coeffs[m]),
                "binomial_value": coeffs_list(expected),
            }
            return CheckResult("infinitesimal", n, "fail", rule.value, bad)
        reduced = modulus.reduce(entry)
        wanted = ZERO if m <= n - 2 else ONE
        if reduced != wanted:
            bad = {"n": n, "m": m, "reduced": coeffs_list(reduced)}
            return CheckResult("infinitesimal", n, "fail", rule.value, bad)
    return CheckResult("infinitesimal", n, "pass", rule.value)


def _check_dp_enum(n: int) -> CheckResult:
    for rule in (WeightRule.LITERAL, WeightRule.PREFIX):
        for s in enumerate_vertices(n):
            dp = path_sum_dp(s, n, rule)
            enum = path_sum_enum(s, n, rule)
            if dp != enum:
                bad = {
                    "n": n,
                    "rule": rule.value,
                    "s": list(s.entries),
                    "dp": coeffs_list(dp),
                    "enum": coeffs_list(enum),
                }
                return CheckResult("dp-vs-enum", n, "fail", None, bad)
    return CheckResult("dp-vs-enum", n, "pass")


def _check_reduction_commutes(n: int, rule: WeightRule) -> CheckResult:
    generic = path_expansion(n, rule)
    direct = root_of_unity_expansion(n, rule)
    swapped = reduce_then_truncate(generic)
    status = "pass" if direct == swapped else "fail"
    return CheckResult("reduction-commutes", n, status, rule.value)


def _first_equivalence_failure(candidate: WeightRule) -> dict | None:
    for n in range(2, ARBITRATION_N_MAX + 1):
        result = _check_oracle_equivalence(n, candidate)
        if not result.passed():
            return result.counterexample
    return None


def four_step_listing_mismatches() -> tuple[ListingMismatch, ...]:
    """Vertices of the four-step expansion where the hand-worked reference
    weights differ from the exact operator-oracle coefficients."""
    oracle = deformed_power(4)
    out = []
    for s in enumerate_vertices(4):
        if not s.entries:
            continue  # the pure d^4 vertex carries no reference value
        stated = REFERENCE_FOUR_STEP_WEIGHTS[s.entries]
        computed = oracle.coefficient(Monomial(s), stay_count(s, 4))
        if poly_from_coeffs(stated) != computed:
            out.append(ListingMismatch(s.entries, stated, tuple(computed.coeffs)))
    return tuple(out)


def verify_suite(n_max: int = 6, rule: WeightRule | None = None) -> VerifyReport:
    """Run every cross-check and return a structured report.

    Checks whose cost is driven by explicit path enumeration
    (dp-vs-enum, binomial-formula) are capped at n = 5.  Failures are
    recorded as data, never raised.  When ``rule`` is given the
    rule-dependent checks run under it (and gate the overall result);
    otherwise the oracle-arbitrated default is used.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    requested = rule.value if rule is not None else "default"

    checks: list[CheckResult] = []
    for candidate in (WeightRule.LITERAL, WeightRule.PREFIX):
        checks.extend(
            _check_oracle_equivalence(n, candidate) for n in range(2, n_max + 1)
        )

    # arbitration always runs over its full fixed range, so a shallow
    # report (small n_max) still selects the same default rule
    first_failure = {
        candidate: _first_equivalence_failure(candidate)
        for candidate in (WeightRule.LITERAL, WeightRule.PREFIX)
    }
    passing = [r for r, bad in first_failure.items() if bad is None]
    failing = [r for r in first_failure if r not in passing]
    arbitration = {
        "passing": passing[0].value if len(passing) == 1 else [r.value for r in passing],
        "failing": failing[0].value if len(failing) == 1 else [r.value for r in failing],
        "counterexample": first_failure[failing[0]] if len(failing) == 1 else None,
    }
    checks.append(
        CheckResult(
            "weight-rule-arbitration",
            ARBITRATION_N_MAX,
            "pass" if len(passing) == 1 else "fail",
            None,
            None if len(passing) == 1 else arbitration,
        )
    )

    selected = rule if rule is not None else (passing[0] if len(passing) == 1 else WeightRule.PREFIX)

    for n in range(2, n_max + 1):
        checks.append(_check_maurer_cartan(n, selected))
    for n in range(2, min(n_max, 5) + 1):
        checks.append(_check_binomial_formula(n))
    for n in range(2, n_max + 1):
        checks.append(_check_infinitesimal(n, selected))
    for n in range(2, min(n_max, 5) + 1):
        checks.append(_check_dp_enum(n))
    for n in range(2, n_max + 1):
        checks.append(_check_reduction_commutes(n, selected))

    mismatches = four_step_listing_mismatches()
    three_step = {
        "missing_word": [0, 0, 0],
        "computed_coeff": [1],
        "note": THREE_STEP_DISPLAY_NOTE,
    }

    gating = [
        c for c in checks if c.rule is None or c.rule == selected.value
    ]
    passed = all(c.passed() for c in gating)

    return VerifyReport(
        n_max=n_max,
        requested_rule=requested,
        selected_rule=selected.value,
        checks=tuple(checks),
        arbitration=arbitration,
        four_step_mismatches=mismatches,
        three_step_display=three_step,
        passed=passed,
    )

"""Axiom-system checkers with replayable witnesses.

Seven checkers share one reporting discipline: every axiom of the system is
evaluated (no short-circuiting between axioms), each failed axiom is listed
with the canonically smallest witness instantiating its quantifiers, and
replaying a witness against the matching predicate below reproduces the
failure.  Scans iterate families in canonical order, so reports are
deterministic and the first failing instance found is the smallest one.

The approximation-based systems restrict heredity to candidates that are
both included in the independent set and dominated by it under the
approximation operator.  On covering neighborhoods the two conditions
coincide (the lower and upper operators fix every definable set), so this
reading agrees with plain approximation dominance there; on successor
neighborhoods of a relation, where distinct definable sets can share an
approximation, the inclusion is what keeps heredity from collapsing the
family upward.
"""

from __future__ import annotations

from typing import Callable

from .core import (
    BinaryRelation,
    Covering,
    NeighborhoodMap,
    Subset,
    Universe,
    canonical_mask_key,
    lower_approx_bits,
    neighborhoods_of_covering,
    successor_neighborhoods,
    upper_approx_bits,
)
from .definable import SetFamily, definable_family
from .report import AxiomFailure, CheckReport

ApproxFn = Callable[[int], int]


def _subsets_canonical(bits: int) -> list[int]:
    """All submasks of ``bits`` in canonical order (including 0 and itself)."""
    subs = [0]
    rest = bits
    while rest:
        low = rest & -rest
        subs += [s | low for s in subs]
        rest &= rest - 1
    return sorted(subs, key=canonical_mask_key)


def augmentation_within(family: SetFamily, i1: Subset, i2: Subset) -> bool:
    """Body of the classical augmentation axiom for one pair: some element
    of i2 - i1 extends i1 inside the family."""
    gap = i2.bits & ~i1.bits
    while gap:
        low = gap & -gap
        if family.contains_bits(i1.bits | low):
            return True
        gap &= gap - 1
    return False


def exchange_within(family: SetFamily, i1: Subset, i2: Subset) -> bool:
    """Body of the rough exchange axiom for one pair: some family member
    lies strictly between i1 and i1 | i2."""
    hi = i1.bits | i2.bits
    for m in family:
        if i1.bits & ~m.bits == 0 and m.bits != i1.bits and m.bits & ~hi == 0:
            return True
    return False


def approx_exchange_within(
    family: SetFamily, approx: ApproxFn, i1: Subset, i2: Subset
) -> bool:
    """Body of the approximation exchange axiom: some family member's
    approximation lies strictly between the approximations of i1 and of
    i1 together with i2."""
    a1 = approx(i1.bits)
    hi = a1 | approx(i2.bits)
    for m in family:
        am = approx(m.bits)
        if a1 & ~am == 0 and am != a1 and am & ~hi == 0:
            return True
    return False


def _definability_precondition(
    check: str, dfam: SetFamily, family: SetFamily
) -> CheckReport | None:
    for m in family:
        if m not in dfam:
            return CheckReport(
                check,
                passed=False,
                failures=(
                    AxiomFailure(
                        "definability",
                        {"member": m},
                        note="candidate family must consist of definable sets",
                    ),
                ),
            )
    return None


def check_matroid(universe: Universe, family: SetFamily) -> CheckReport:
    """Classical independence axioms: empty set present, heredity over all
    subsets, and augmentation between sets of different cardinality."""
    failures: list[AxiomFailure] = []
    empty = universe.empty()
    if empty not in family:
        failures.append(AxiomFailure("I1", {"missing": empty}))

    def i2_failure() -> AxiomFailure | None:
        for ind in family:
            for sub in _subsets_canonical(ind.bits):
                if not family.contains_bits(sub):
                    return AxiomFailure("I2", {"I": ind, "I'": Subset(universe, sub)})
        return None

    def i3_failure() -> AxiomFailure | None:
        for i1 in family:
            for i2 in family:
                if len(i1) < len(i2) and not augmentation_within(family, i1, i2):
                    return AxiomFailure("I3", {"I1": i1, "I2": i2})
        return None

    for finder in (i2_failure, i3_failure):
        failure = finder()
        if failure is not None:
            failures.append(failure)
    return CheckReport("matroid", passed=not failures, failures=tuple(failures))


def _check_rough_given(
    check: str,
    dfam: SetFamily,
    family: SetFamily,
    tags: tuple[str, str, str],
    include_exchange: bool = True,
) -> CheckReport:
    """Shared body of the plain rough-matroid check for a precomputed
    definable family; heredity ranges over definable subsets only."""
    pre = _definability_precondition(check, dfam, family)
    if pre is not None:
        return pre
    t1, t2, t3 = tags
    universe = family.universe
    failures: list[AxiomFailure] = []
    if not family.contains_bits(0):
        failures.append(AxiomFailure(t1, {"missing": universe.empty()}))

    def heredity_failure() -> AxiomFailure | None:
        for ind in family:
            for cand in dfam:
                if cand.bits & ~ind.bits == 0 and not family.contains_bits(cand.bits):
                    return AxiomFailure(t2, {"I": ind, "I'": cand})
        return None

    def exchange_failure() -> AxiomFailure | None:
        for i1 in family:
            for i2 in family:
                if len(i1) < len(i2) and not exchange_within(family, i1, i2):
                    return AxiomFailure(t3, {"I1": i1, "I2": i2})
        return None

    finders = [heredity_failure]
    if include_exchange:
        finders.append(exchange_failure)
    for finder in finders:
        failure = finder()
        if failure is not None:
            failures.append(failure)
    return CheckReport(check, passed=not failures, failures=tuple(failures))


def check_rough_matroid_covering(covering: Covering, family: SetFamily) -> CheckReport:
    """Rough matroid over a covering: membership in the definable family,
    then the empty set, definable-subset heredity, and exchange."""
    dfam = definable_family(neighborhoods_of_covering(covering))
    return _check_rough_given("rough-cov", dfam, family, ("CI1", "CI2", "CI3"))


def _check_approx_given(
    check: str,
    dfam: SetFamily,
    family: SetFamily,
    approx: ApproxFn,
    tags: tuple[str, str, str],
) -> CheckReport:
    pre = _definability_precondition(check, dfam, family)
    if pre is not None:
        return pre
    t1, t2, t3 = tags
    universe = family.universe
    failures: list[AxiomFailure] = []
    if not family.contains_bits(0):
        failures.append(AxiomFailure(t1, {"missing": universe.empty()}))
    apx = {m.bits: approx(m.bits) for m in dfam}

    def heredity_failure() -> AxiomFailure | None:
        for ind in family:
            ai = apx[ind.bits]
            for cand in dfam:
                if (
                    cand.bits & ~ind.bits == 0
                    and apx[cand.bits] & ~ai == 0
                    and not family.contains_bits(cand.bits)
                ):
                    return AxiomFailure(t2, {"I": ind, "I'": cand})
        return None

    def exchange_failure() -> AxiomFailure | None:
        for i1 in family:
            for i2 in family:
                if apx[i1.bits].bit_count() < apx[i2.bits].bit_count():
                    if not approx_exchange_within(family, lambda b: apx[b], i1, i2):
                        return AxiomFailure(t3, {"I1": i1, "I2": i2})
        return None

    for finder in (heredity_failure, exchange_failure):
        failure = finder()
        if failure is not None:
            failures.append(failure)
    return CheckReport(check, passed=not failures, failures=tuple(failures))


def _lower_fn(nm: NeighborhoodMap) -> ApproxFn:
    return lambda bits: lower_approx_bits(nm.cell_bits, bits)


def _upper_fn(nm: NeighborhoodMap) -> ApproxFn:
    return lambda bits: upper_approx_bits(nm.cell_bits, bits)


def check_lower_rough_matroid_covering(covering: Covering, family: SetFamily) -> CheckReport:
    nm = neighborhoods_of_covering(covering)
    dfam = definable_family(nm)
    return _check_approx_given("lower-cov", dfam, family, _lower_fn(nm), ("LI1", "LI2", "LI3"))


def check_upper_rough_matroid_covering(covering: Covering, family: SetFamily) -> CheckReport:
    nm = neighborhoods_of_covering(covering)
    dfam = definable_family(nm)
    return _check_approx_given("upper-cov", dfam, family, _upper_fn(nm), ("UI1", "UI2", "UI3"))


def check_lower_rough_matroid_relation(relation: BinaryRelation, family: SetFamily) -> CheckReport:
    nm = successor_neighborhoods(relation)
    dfam = definable_family(nm)
    return _check_approx_given("lower-rel", dfam, family, _lower_fn(nm), ("LI1", "LI2", "LI3"))


def check_upper_rough_matroid_relation(relation: BinaryRelation, family: SetFamily) -> CheckReport:
    nm = successor_neighborhoods(relation)
    dfam = definable_family(nm)
    return _check_approx_given("upper-rel", dfam, family, _upper_fn(nm), ("UI1", "UI2", "UI3"))


def check_matroid_condition(covering: Covering, family: SetFamily) -> CheckReport:
    """Both sides of the matroid criterion for a rough matroid: classical
    matroid-ness on one side, singleton neighborhoods across the family's
    support on the other.  Passes when the sides agree."""
    rough = check_rough_matroid_covering(covering, family)
    if not rough.passed:
        return CheckReport(
            "matroid-cond",
            passed=False,
            failures=(
                AxiomFailure(
                    "precondition",
                    dict(rough.witness or {}),
                    note=f"family is not a rough matroid ({rough.failed_axiom} fails)",
                ),
            ),
        )
    nm = neighborhoods_of_covering(covering)
    support = family.union_all()
    offending = [
        covering.universe.labels[i]
        for i in support.indices()
        if nm.cell_bits[i] != (1 << i)
    ]
    is_matroid = check_matroid(covering.universe, family).passed
    singleton_support = not offending
    agree = is_matroid == singleton_support
    failures = ()
    if not agree:
        witness = {"is_matroid": is_matroid, "singleton_neighborhoods": singleton_support}
        if offending:
            witness["element"] = offending[0]
        failures = (
            AxiomFailure("equivalence", witness, note="the two sides disagree"),
        )
    return CheckReport(
        "matroid-cond",
        passed=agree,
        failures=failures,
        details={
            "is_matroid": is_matroid,
            "singleton_neighborhoods_on_support": singleton_support,
            "support": support.notation(),
        },
    )

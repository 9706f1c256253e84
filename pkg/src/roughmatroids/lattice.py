"""Hasse diagrams over inclusion, lattice law checks, and DOT export.

A family closed under union and intersection is a lattice under inclusion
with join = union and meet = intersection.  ``build_lattice`` requires that
closure up front (the closure witness rides along in the error), computes
the cover edges of inclusion, and designates the least and greatest
members.  The law checkers scan every pair and triple and report the first
counterexample in canonical order; the atomicity check is informational and
returns the atom list either way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Subset
from .definable import SetFamily, check_closure
from .report import AxiomFailure, CheckReport


class NotALatticeError(ValueError):
    """The family is not closed under union/intersection."""

    def __init__(self, report: CheckReport):
        self.report = report
        witness = report.witness or {}
        parts = ", ".join(
            f"{k}={v.notation() if isinstance(v, Subset) else v}" for k, v in witness.items()
        )
        super().__init__(f"family is not a lattice: {report.failed_axiom} fails ({parts})")


@dataclass(frozen=True)
class LatticeDiagram:
    """Nodes, cover edges, and the designated bottom and top.

    ``edges`` holds index pairs (lower, upper) into ``family.members``; each
    pair is a covering pair of inclusion restricted to the family, listed
    bottom-to-top in canonical node order.
    """

    family: SetFamily
    edges: tuple[tuple[int, int], ...]
    bottom: Subset
    top: Subset

    @property
    def nodes(self) -> tuple[Subset, ...]:
        return self.family.members

    def edge_sets(self) -> tuple[tuple[Subset, Subset], ...]:
        mem = self.family.members
        return tuple((mem[i], mem[j]) for i, j in self.edges)


def build_lattice(family: SetFamily) -> LatticeDiagram:
    """Hasse diagram of inclusion over a union/intersection-closed family."""
    if len(family) == 0:
        raise NotALatticeError(
            CheckReport("closure", passed=False, notes="empty family has no bottom element")
        )
    closure = check_closure(family)
    if not closure.passed:
        raise NotALatticeError(closure)
    members = family.members
    n = len(members)
    edges: list[tuple[int, int]] = []
    for i in range(n):
        for j in range(n):
            if i == j or not members[i] < members[j]:
                continue
            covered = True
            for k in range(n):
                if k in (i, j):
                    continue
                if members[i] < members[k] and members[k] < members[j]:
                    covered = False
                    break
            if covered:
                edges.append((i, j))
    # Closure under both operations makes the total meet and join members,
    # hence the canonical first and last entries.
    return LatticeDiagram(family, tuple(sorted(edges)), members[0], members[-1])


def _first_law_failure(members, axiom, arity, holds):
    for combo in _index_tuples(len(members), arity):
        if not holds(*(members[i].bits for i in combo)):
            names = ("a", "b", "c")[:arity]
            return AxiomFailure(axiom, dict(zip(names, (members[i] for i in combo))))
    return None


def _index_tuples(n, arity):
    if arity == 1:
        return ((i,) for i in range(n))
    if arity == 2:
        return ((i, j) for i in range(n) for j in range(n))
    return ((i, j, k) for i in range(n) for j in range(n) for k in range(n))


def check_lattice_laws(diagram: LatticeDiagram) -> CheckReport:
    """Verify idempotence, commutativity, associativity, and absorption of
    join/meet over all pairs and triples of lattice members.

    Each law lists its canonically first counterexample on failure."""
    members = diagram.family.members
    laws = (
        ("P1-idempotence", 1, lambda a: (a | a) == a and (a & a) == a),
        ("P2-commutativity", 2, lambda a, b: (a | b) == (b | a) and (a & b) == (b & a)),
        (
            "P3-associativity",
            3,
            lambda a, b, c: ((a | b) | c) == (a | (b | c)) and ((a & b) & c) == (a & (b & c)),
        ),
        ("P4-absorption", 2, lambda a, b: (a | (a & b)) == a and (a & (a | b)) == a),
    )
    failures = []
    for axiom, arity, holds in laws:
        failure = _first_law_failure(members, axiom, arity, holds)
        if failure is not None:
            failures.append(failure)
    return CheckReport("lattice-laws", passed=not failures, failures=tuple(failures))


def check_atomicity(diagram: LatticeDiagram) -> CheckReport:
    """Report whether every member is the join of the atoms below it.

    Atoms are the covers of the bottom element.  The verdict is
    informational: a non-atomic definable-set lattice is a legitimate
    finding, not an input error.  The atom list is always included in the
    report details.
    """
    members = diagram.family.members
    bottom_idx = members.index(diagram.bottom)
    atom_idx = sorted(j for i, j in diagram.edges if i == bottom_idx)
    atoms = tuple(members[j] for j in atom_idx)
    failures: list[AxiomFailure] = []
    for m in members:
        join = diagram.bottom.bits
        for a in atoms:
            if a.bits & ~m.bits == 0:
                join |= a.bits
        if join != m.bits:
            failures.append(
                AxiomFailure(
                    "atomicity",
                    {"member": m},
                    note="member is not the join of the atoms below it",
                )
            )
            break
    return CheckReport(
        "atomicity",
        passed=not failures,
        failures=tuple(failures),
        details={"atoms": [a.notation() for a in atoms]},
    )


def export_dot(diagram: LatticeDiagram) -> str:
    """Deterministic DOT rendering; identical input gives identical bytes.

    Nodes appear in canonical family order and edges run bottom-to-top.
    """
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i, m in enumerate(diagram.nodes):
        label = m.notation().replace('"', '\\"')
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in diagram.edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"

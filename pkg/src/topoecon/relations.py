"""Finite confidence preorders and their ordinal influence representations.

A confidence relation is a binary relation "x is confided at least as much
as y" on a finite choice set.  When it is reflexive, complete and transitive
it can be represented by a real-valued influence assignment: ``holds(x, y)``
iff ``value(x) >= value(y)``.  The representation is ordinal only — any
strictly increasing transform of the values represents the same relation,
and value differences carry no meaning.

The continuum machinery surrounding such relations (continuity, strict
monotonicity) is vacuous on finite unordered label sets and is deliberately
not modelled here; finiteness keeps the axioms decidable and the
representation constructive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import InvariantError, OperationError


class NotAPreorder(OperationError):
    """The relation fails at least one of the three preorder axioms."""

    def __init__(self, report: "AxiomReport"):
        self.report = report
        failed = [name for name, ok in (
            ("reflexivity", report.reflexive),
            ("completeness", report.complete),
            ("transitivity", report.transitive),
        ) if not ok]
        super().__init__(f"relation is not a complete preorder; failed: {', '.join(failed)}")


class ChoiceSetMismatch(OperationError):
    """Two objects that must share a choice set do not."""


@dataclass(frozen=True)
class ChoiceSet:
    """A nonempty, ordered collection of pairwise-distinct opaque labels."""

    elements: tuple[str, ...]

    def __init__(self, elements: Iterable[str]):
        elems = tuple(str(e) for e in elements)
        if not elems:
            raise InvariantError("choice set must be nonempty")
        if len(set(elems)) != len(elems):
            raise InvariantError("choice set labels must be pairwise distinct")
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise InvariantError(f"label {label!r} is not in the choice set") from None


@dataclass(frozen=True)
class ConfidenceRelation:
    """Boolean pairwise table: ``holds[i][j]`` means element_i >= element_j."""

    choice_set: ChoiceSet
    holds: tuple[tuple[bool, ...], ...]

    def __init__(self, choice_set: ChoiceSet, holds: Sequence[Sequence[bool]]):
        n = len(choice_set)
        table = tuple(tuple(bool(v) for v in row) for row in holds)
        if len(table) != n or any(len(row) != n for row in table):
            raise InvariantError(f"relation table must be {n}x{n}")
        object.__setattr__(self, "choice_set", choice_set)
        object.__setattr__(self, "holds", table)

    @classmethod
    def from_pairs(
        cls,
        elements: Iterable[str],
        pairs: Iterable[tuple[str, str]],
    ) -> "ConfidenceRelation":
        """Build from an element list and the explicit true ordered pairs.

        This is the scenario-file ingestion form: any pair not listed is
        false, including diagonal pairs.
        """
        cs = ChoiceSet(elements)
        n = len(cs)
        table = [[False] * n for _ in range(n)]
        for x, y in pairs:
            table[cs.index(x)][cs.index(y)] = True
        return cls(cs, table)

    def holds_between(self, x: str, y: str) -> bool:
        return self.holds[self.choice_set.index(x)][self.choice_set.index(y)]


@dataclass(frozen=True)
class InfluenceAssignment:
    """One real influence level per element of a choice set (ordinal only)."""

    choice_set: ChoiceSet
    value: Mapping[str, float]

    def __init__(self, choice_set: ChoiceSet, value: Mapping[str, float]):
        vals = {str(k): float(v) for k, v in value.items()}
        if set(vals) != set(choice_set.elements):
            raise InvariantError("assignment must cover exactly the choice set")
        object.__setattr__(self, "choice_set", choice_set)
        object.__setattr__(self, "value", vals)

    def level(self, label: str) -> float:
        return self.value[label]


@dataclass(frozen=True)
class MonotoneTransform:
    """Strictly increasing piecewise-linear map, linearly extrapolated.

    Breakpoints must be strictly increasing in both coordinates, which makes
    strict monotonicity trivially verifiable.
    """

    breakpoints: tuple[tuple[float, float], ...]

    def __init__(self, breakpoints: Iterable[tuple[float, float]]):
        pts = tuple((float(x), float(y)) for x, y in breakpoints)
        if len(pts) < 2:
            raise InvariantError("transform needs at least two breakpoints")
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise InvariantError("breakpoint inputs must be strictly increasing")
        if any(b <= a for a, b in zip(ys, ys[1:])):
            raise InvariantError("breakpoint outputs must be strictly increasing")
        object.__setattr__(self, "breakpoints", pts)

    def __call__(self, t: float) -> float:
        pts = self.breakpoints
        # Pick the segment whose input interval contains t; clamp to the end
        # segments for extrapolation.
        if t <= pts[0][0]:
            (x0, y0), (x1, y1) = pts[0], pts[1]
        elif t >= pts[-1][0]:
            (x0, y0), (x1, y1) = pts[-2], pts[-1]
        else:
            k = max(i for i in range(len(pts) - 1) if pts[i][0] <= t)
            (x0, y0), (x1, y1) = pts[k], pts[k + 1]
        return y0 + (y1 - y0) * (t - x0) / (x1 - x0)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the three preorder-axiom checks.

    ``witnesses`` holds, for each failed axiom, one violating tuple of
    element labels (the lexicographically first violation).  A witness is
    present if and only if the corresponding flag is false.
    """

    reflexive: bool
    complete: bool
    transitive: bool
    witnesses: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        expected = {name for name, ok in (
            ("reflexive", self.reflexive),
            ("complete", self.complete),
            ("transitive", self.transitive),
        ) if not ok}
        if set(self.witnesses) != expected:
            raise InvariantError("witnesses must match exactly the failed axioms")

    @property
    def all_hold(self) -> bool:
        return self.reflexive and self.complete and self.transitive

    def to_dict(self) -> dict:
        return {
            "reflexive": self.reflexive,
            "complete": self.complete,
            "transitive": self.transitive,
            "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())},
        }


def check_axioms(rel: ConfidenceRelation) -> AxiomReport:
    """Check reflexivity, completeness and transitivity.

    Witnesses report the first violation in lexicographic element order, so
    the report is deterministic regardless of element ordering.
    """
    labels = sorted(rel.choice_set.elements)
    idx = {lab: rel.choice_set.index(lab) for lab in labels}
    holds = rel.holds
    witnesses: dict[str, tuple[str, ...]] = {}

    reflexive = True
    for x in labels:
        if not holds[idx[x]][idx[x]]:
            reflexive = False
            witnesses["reflexive"] = (x,)
            break

    complete = True
    # The quantifier runs over all pairs including x == y, so an irreflexive
    # element also breaks completeness.
    for x, y in itertools.combinations_with_replacement(labels, 2):
        if not (holds[idx[x]][idx[y]] or holds[idx[y]][idx[x]]):
            complete = False
            witnesses["complete"] = (x, y)
            break

    transitive = True
    for x, y, z in itertools.product(labels, repeat=3):
        if holds[idx[x]][idx[y]] and holds[idx[y]][idx[z]] and not holds[idx[x]][idx[z]]:
            transitive = False
            witnesses["transitive"] = (x, y, z)
            break

    return AxiomReport(reflexive, complete, transitive, witnesses)


def build_influence(rel: ConfidenceRelation) -> InfluenceAssignment:
    """Construct the canonical ordinal representation of a complete preorder.

    Levels are consecutive integers ``0..k-1``, one per indifference class
    (x ~ y iff both directions hold), with the lowest class at 0.  Any other
    valid representation is reachable via :func:`apply_transform`.

    Raises:
        NotAPreorder: if any axiom fails; carries the AxiomReport.
    """
    report = check_axioms(rel)
    if not report.all_hold:
        raise NotAPreorder(report)

    n = len(rel.choice_set)
    holds = rel.holds
    # Count elements strictly below each element.  Classes are totally
    # ordered, so distinct classes have distinct strictly-below counts and
    # sorting those counts recovers the class ladder.
    below = [
        sum(1 for j in range(n) if holds[i][j] and not holds[j][i])
        for i in range(n)
    ]
    ladder = sorted(set(below))
    value = {
        label: float(ladder.index(below[i]))
        for i, label in enumerate(rel.choice_set.elements)
    }
    return InfluenceAssignment(rel.choice_set, value)


def verify_representation(rel: ConfidenceRelation, assignment: InfluenceAssignment) -> bool:
    """True iff ``holds(x, y) <=> value(x) >= value(y)`` for every ordered pair."""
    if rel.choice_set != assignment.choice_set:
        raise ChoiceSetMismatch("relation and assignment use different choice sets")
    elems = rel.choice_set.elements
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            if rel.holds[i][j] != (assignment.value[x] >= assignment.value[y]):
                return False
    return True


def apply_transform(
    assignment: InfluenceAssignment, transform: MonotoneTransform
) -> InfluenceAssignment:
    """Re-express an assignment through a strictly increasing transform.

    The pairwise order of values is preserved exactly, so the transformed
    assignment represents the same confidences.
    """
    return InfluenceAssignment(
        assignment.choice_set,
        {label: transform(v) for label, v in assignment.value.items()},
    )

"""Validation of parsed statements and contraction scheduling.

``validate`` checks a statement against the bound signatures and produces a
ContractionPlan whose per-term schedule contracts factors pairwise left to
right.  ``order_contractions`` rewrites each schedule greedily, always
merging the pair with the smallest result first (ties broken by position),
which never changes values, only cost.

Index-to-slot matching: in strict mode the written upper indices bind the
upper slots in order and the written lower indices bind the lower slots in
order, so ``x_1^r`` and ``x^r_1`` address the same object.  In orthogonal
mode variance carries no information and matching is positional: written
index k binds slot k, and the binding's variances are coerced to the
written ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from ..errors import AddressingError, ConventionError, ShapeError
from ..objects import DOWN, UP, TensorObject, Variance
from .syntax import FactorRef, Statement


class Mode(enum.Enum):
    STRICT = "strict"
    ORTHOGONAL = "orthogonal"


Signature = tuple[int, tuple[Variance, ...], int]  # (dim, slots, weight)


@dataclass(frozen=True)
class FactorPlan:
    """One factor occurrence resolved against its binding.

    ``axis_letters`` annotates every slot of the bound object with the
    symbolic letter addressing it, or None for a slot fixed by a digit.
    ``fixed`` lists (slot, 1-based value) pairs; ``self_pairs`` lists slot
    pairs contracted inside this factor; ``open_letters`` are the letters
    left open after slicing and self-contraction, in slot order.
    """

    name: str
    axis_letters: tuple[str | None, ...]
    fixed: tuple[tuple[int, int], ...]
    self_pairs: tuple[tuple[int, int], ...]
    open_letters: tuple[str, ...]


@dataclass(frozen=True)
class ScheduleStep:
    """Contract working items ``left`` and ``right`` (left < right).

    The result replaces position ``left`` and position ``right`` is
    removed.  ``cost`` is the multiply-add estimate dim ** |letter union|.
    """

    left: int
    right: int
    shared: tuple[str, ...]
    result_letters: tuple[str, ...]
    cost: int


@dataclass(frozen=True)
class TermPlan:
    coefficient: float
    factors: tuple[FactorPlan, ...]
    dummy_letters: tuple[str, ...]
    steps: tuple[ScheduleStep, ...]
    prep_cost: int
    naive_cost: int

    @property
    def scheduled_cost(self) -> int:
        return self.prep_cost + sum(s.cost for s in self.steps)


@dataclass(frozen=True)
class ContractionPlan:
    statement: Statement
    mode: Mode
    dim: int
    result_slots: tuple[Variance, ...]
    weight: int
    free_letters: tuple[str, ...]
    signatures: dict[str, Signature]
    terms: tuple[TermPlan, ...]

    @property
    def total_cost(self) -> int:
        return sum(t.scheduled_cost for t in self.terms)

    @property
    def naive_cost(self) -> int:
        return sum(t.naive_cost for t in self.terms)


def _signature(name: str, value: object) -> Signature:
    if isinstance(value, TensorObject):
        return (value.dim, value.slots, value.weight)
    try:
        dim, slots, weight = value  # type: ignore[misc]
        slots = tuple(slots)
    except (TypeError, ValueError):
        raise ShapeError(
            f"signature for {name!r} must be a TensorObject or (dim, slots, weight)"
        ) from None
    if not all(isinstance(s, Variance) for s in slots):
        raise ShapeError(f"signature for {name!r} has non-Variance slots")
    return (int(dim), slots, int(weight))


def _resolve_slots(factor: FactorRef, slots: tuple[Variance, ...], mode: Mode) -> list[int]:
    """Map written index position -> bound slot position."""
    if len(factor.indices) != len(slots):
        raise ShapeError(
            f"factor {factor.name!r} is written with {len(factor.indices)} "
            f"indices but is bound to a rank-{len(slots)} object"
        )
    if mode is Mode.ORTHOGONAL:
        return list(range(len(slots)))
    by_variance = {UP: [k for k, s in enumerate(slots) if s is UP],
                   DOWN: [k for k, s in enumerate(slots) if s is DOWN]}
    mapping: list[int] = []
    taken = {UP: 0, DOWN: 0}
    for spec in factor.indices:
        pool = by_variance[spec.variance]
        if taken[spec.variance] >= len(pool):
            ups = sum(1 for i in factor.indices if i.variance is UP)
            raise ShapeError(
                f"factor {factor.name!r} is written with {ups} upper and "
                f"{len(factor.indices) - ups} lower indices but is bound to "
                f"slots ({', '.join(s.value for s in slots)})"
            )
        mapping.append(pool[taken[spec.variance]])
        taken[spec.variance] += 1
    return mapping


def validate(
    statement: Statement,
    signatures: dict[str, object],
    mode: Mode = Mode.STRICT,
) -> ContractionPlan:
    """Check conventions and bindings; return an executable plan.

    Raises ShapeError for binding mismatches (unbound name, wrong arity or
    variance counts, conflicting dims), ConventionError for summation
    convention violations (a letter used three times, a dummy pair that is
    not upper+lower in strict mode, free-letter or weight mismatches across
    terms, a missing or non-matching target layout), and AddressingError
    for a fixed digit index outside 1..dim.
    """
    resolved: dict[str, Signature] = {}

    def lookup(name: str) -> Signature:
        if name not in resolved:
            if name not in signatures:
                raise ShapeError(f"no binding for name {name!r}")
            resolved[name] = _signature(name, signatures[name])
        return resolved[name]

    dim: int | None = None
    for term in statement.terms:
        for factor in term.factors:
            d = lookup(factor.name)[0]
            if dim is None:
                dim = d
            elif d != dim:
                raise ShapeError(
                    f"dim mismatch: {factor.name!r} has dim {d}, expected {dim}"
                )
    assert dim is not None  # the grammar guarantees at least one factor

    term_plans: list[TermPlan] = []
    term_free: list[dict[str, Variance]] = []
    term_weights: list[int] = []

    for term in statement.terms:
        # letter -> list of (factor position, slot, written variance)
        occurrences: dict[str, list[tuple[int, int, Variance]]] = {}
        axis_letters_all: list[list[str | None]] = []
        fixed_all: list[list[tuple[int, int]]] = []

        for fpos, factor in enumerate(term.factors):
            _, slots, _ = lookup(factor.name)
            mapping = _resolve_slots(factor, slots, mode)
            axis_letters: list[str | None] = [None] * len(slots)
            fixed: list[tuple[int, int]] = []
            for spec, slot in zip(factor.indices, mapping):
                if spec.is_fixed:
                    value = int(spec.letter)
                    if value > dim:
                        raise AddressingError(
                            f"fixed index {value} outside 1..{dim} "
                            f"in factor {factor.name!r}"
                        )
                    fixed.append((slot, value))
                else:
                    axis_letters[slot] = spec.letter
                    occurrences.setdefault(spec.letter, []).append(
                        (fpos, slot, spec.variance)
                    )
            axis_letters_all.append(axis_letters)
            fixed_all.append(sorted(fixed))

        free: dict[str, Variance] = {}
        dummies: list[str] = []
        self_pairs_all: list[list[tuple[int, int]]] = [[] for _ in term.factors]
        for letter, occ in occurrences.items():
            if len(occ) > 2:
                raise ConventionError(
                    f"index {letter!r} appears {len(occ)} times in one term; "
                    "an index may appear at most twice"
                )
            if len(occ) == 1:
                free[letter] = occ[0][2]
                continue
            (f1, s1, v1), (f2, s2, v2) = occ
            if mode is Mode.STRICT and {v1, v2} != {UP, DOWN}:
                raise ConventionError(
                    f"summed index {letter!r} must appear once as an upper and "
                    f"once as a lower index, got {v1.value} and {v2.value}"
                )
            dummies.append(letter)
            if f1 == f2:
                self_pairs_all[f1].append((s1, s2))
                axis_letters_all[f1][s1] = letter
                axis_letters_all[f1][s2] = letter

        factor_plans: list[FactorPlan] = []
        prep_cost = 0
        for fpos, factor in enumerate(term.factors):
            axis_letters = axis_letters_all[fpos]
            closed = {s for s, _ in fixed_all[fpos]}
            for s1, s2 in self_pairs_all[fpos]:
                closed.add(s1)
                closed.add(s2)
            open_letters = tuple(
                letter
                for s, letter in enumerate(axis_letters)
                if s not in closed and letter is not None
            )
            axes = len(axis_letters) - len(fixed_all[fpos])
            for _ in self_pairs_all[fpos]:
                prep_cost += dim ** axes
                axes -= 2
            factor_plans.append(
                FactorPlan(
                    name=factor.name,
                    axis_letters=tuple(axis_letters),
                    fixed=tuple(fixed_all[fpos]),
                    self_pairs=tuple(self_pairs_all[fpos]),
                    open_letters=open_letters,
                )
            )

        steps = _left_to_right_steps([f.open_letters for f in factor_plans], dim)
        weight = sum(lookup(f.name)[2] for f in term.factors)
        term_plans.append(
            TermPlan(
                coefficient=term.coefficient,
                factors=tuple(factor_plans),
                dummy_letters=tuple(dummies),
                steps=tuple(steps),
                prep_cost=prep_cost,
                naive_cost=dim ** len(occurrences),
            )
        )
        term_free.append(free)
        term_weights.append(weight)

    first_free = term_free[0]
    for k, free in enumerate(term_free[1:], start=2):
        if set(free) != set(first_free):
            raise ConventionError(
                f"free indices differ between terms: "
                f"{sorted(first_free)} in term 1 vs {sorted(free)} in term {k}"
            )
        if mode is Mode.STRICT:
            for letter in free:
                if free[letter] is not first_free[letter]:
                    raise ConventionError(
                        f"free index {letter!r} changes variance between terms"
                    )
    for k, w in enumerate(term_weights[1:], start=2):
        if w != term_weights[0]:
            raise ConventionError(
                f"weight mismatch between summed terms: "
                f"{term_weights[0]} in term 1 vs {w} in term {k}"
            )

    target = statement.target
    if target is None:
        if first_free:
            raise ConventionError(
                "a target layout is required when free indices exist: "
                f"{sorted(first_free)}"
            )
        free_letters: tuple[str, ...] = ()
        result_slots: tuple[Variance, ...] = ()
    else:
        for spec in target.indices:
            if spec.is_fixed:
                raise ConventionError("target indices must be letters, not digits")
        target_letters = [spec.letter for spec in target.indices]
        if sorted(target_letters) != sorted(first_free):
            raise ConventionError(
                f"target layout {target_letters} is not a permutation of the "
                f"free indices {sorted(first_free)}"
            )
        if mode is Mode.STRICT:
            for spec in target.indices:
                if spec.variance is not first_free[spec.letter]:
                    raise ConventionError(
                        f"target writes index {spec.letter!r} as "
                        f"{spec.variance.value} but it is free as "
                        f"{first_free[spec.letter].value}"
                    )
        free_letters = tuple(target_letters)
        result_slots = tuple(spec.variance for spec in target.indices)

    return ContractionPlan(
        statement=statement,
        mode=mode,
        dim=dim,
        result_slots=result_slots,
        weight=term_weights[0],
        free_letters=free_letters,
        signatures=resolved,
        terms=tuple(term_plans),
    )


def _merge(
    items: list[tuple[str, ...]], i: int, j: int, dim: int
) -> tuple[ScheduleStep, list[tuple[str, ...]]]:
    left, right = items[i], items[j]
    shared = tuple(l for l in left if l in right)
    result = tuple(l for l in left if l not in shared) + tuple(
        l for l in right if l not in shared
    )
    cost = dim ** (len(result) + len(shared))
    step = ScheduleStep(i, j, shared, result, cost)
    items = items[:i] + [result] + items[i + 1 : j] + items[j + 1 :]
    return step, items


def _left_to_right_steps(
    open_letters: list[tuple[str, ...]], dim: int
) -> list[ScheduleStep]:
    items = list(open_letters)
    steps: list[ScheduleStep] = []
    while len(items) > 1:
        step, items = _merge(items, 0, 1, dim)
        steps.append(step)
    return steps


def _greedy_steps(
    open_letters: list[tuple[str, ...]], dim: int
) -> list[ScheduleStep]:
    items = list(open_letters)
    steps: list[ScheduleStep] = []
    while len(items) > 1:
        best: tuple[int, int, int] | None = None
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                shared = sum(1 for l in items[i] if l in items[j])
                size = dim ** (len(items[i]) + len(items[j]) - 2 * shared)
                if best is None or size < best[0]:
                    best = (size, i, j)
        assert best is not None
        step, items = _merge(items, best[1], best[2], dim)
        steps.append(step)
    return steps


def order_contractions(plan: ContractionPlan) -> ContractionPlan:
    """Reorder every term's schedule by the greedy smallest-result rule.

    Pure: returns a new plan; values are unchanged, only the cost model.
    """
    new_terms = tuple(
        replace(
            term,
            steps=tuple(_greedy_steps([f.open_letters for f in term.factors], plan.dim)),
        )
        for term in plan.terms
    )
    return replace(plan, terms=new_terms)

"""Evaluate a ContractionPlan against concrete bindings.

Evaluation replays each term's recorded schedule step by step, so a plan
rewritten by ``order_contractions`` is genuinely executed in the new order.
All work happens on numpy views and fresh arrays; bindings are never
mutated, and independent output cells vectorize internally, so evaluation
is safe to run concurrently.
"""

from __future__ import annotations

import numpy as np

from ..errors import ShapeError
from ..objects import TensorObject, new_object
from .planner import ContractionPlan, FactorPlan, Mode


def _check_bindings(plan: ContractionPlan, bindings: dict[str, TensorObject]) -> None:
    for name, (dim, slots, weight) in plan.signatures.items():
        if name not in bindings:
            raise ShapeError(f"no binding for name {name!r}")
        t = bindings[name]
        if not isinstance(t, TensorObject):
            raise ShapeError(f"binding for {name!r} is not a TensorObject")
        if t.dim != dim:
            raise ShapeError(
                f"binding for {name!r} has dim {t.dim}, plan expects {dim}"
            )
        if plan.mode is Mode.STRICT:
            if t.slots != slots:
                raise ShapeError(
                    f"binding for {name!r} has slots "
                    f"({', '.join(s.value for s in t.slots)}), plan expects "
                    f"({', '.join(s.value for s in slots)})"
                )
        elif t.rank != len(slots):
            raise ShapeError(
                f"binding for {name!r} has rank {t.rank}, plan expects {len(slots)}"
            )
        if t.weight != weight:
            raise ShapeError(
                f"binding for {name!r} has weight {t.weight}, plan expects {weight}"
            )


def _prepare_factor(
    fp: FactorPlan, bindings: dict[str, TensorObject]
) -> tuple[np.ndarray, list[str]]:
    """Slice fixed axes, sum self-contracted pairs, return open-letter axes."""
    arr = bindings[fp.name].components
    letters: list[str | None] = list(fp.axis_letters)

    for slot, value in sorted(fp.fixed, reverse=True):
        arr = np.take(arr, value - 1, axis=slot)
        del letters[slot]

    # self pairs were recorded as slot positions; axes have shifted after
    # slicing, so locate repeated letters afresh and trace them out
    while True:
        pair = None
        for a in range(len(letters)):
            if letters[a] is None:
                continue
            for b in range(a + 1, len(letters)):
                if letters[b] == letters[a]:
                    pair = (a, b)
                    break
            if pair:
                break
        if pair is None:
            break
        a, b = pair
        arr = np.trace(arr, axis1=a, axis2=b)
        del letters[b]
        del letters[a]

    open_letters = [l for l in letters if l is not None]
    assert tuple(open_letters) == fp.open_letters
    return np.asarray(arr), open_letters


def execute(plan: ContractionPlan, bindings: dict[str, TensorObject]) -> TensorObject:
    """Run the plan and return the result object.

    Bindings must match the signatures recorded in the plan (exactly in
    strict mode; up to variance coercion in orthogonal mode).
    """
    _check_bindings(plan, bindings)
    total: np.ndarray | None = None

    for term in plan.terms:
        items = [_prepare_factor(fp, bindings) for fp in term.factors]
        for step in term.steps:
            left_arr, left_letters = items[step.left]
            right_arr, right_letters = items[step.right]
            ax_left = [left_letters.index(l) for l in step.shared]
            ax_right = [right_letters.index(l) for l in step.shared]
            merged = np.tensordot(left_arr, right_arr, axes=(ax_left, ax_right))
            letters = [l for l in left_letters if l not in step.shared] + [
                l for l in right_letters if l not in step.shared
            ]
            assert tuple(letters) == step.result_letters
            items[step.left] = (merged, letters)
            del items[step.right]

        arr, letters = items[0]
        if plan.free_letters:
            arr = np.transpose(arr, [letters.index(l) for l in plan.free_letters])
        if term.coefficient != 1.0:
            arr = arr * term.coefficient
        total = np.asarray(arr) if total is None else total + arr

    assert total is not None
    return new_object(plan.dim, plan.result_slots, plan.weight, total)

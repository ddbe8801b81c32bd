"""Reference implementations the tests compare the library against.

Deliberately naive: pure Python loops over lists, recursion, no shared code
with the package internals and no vectorized shortcuts.  Slow is fine here.
"""

from __future__ import annotations

import itertools

import numpy as np

from indicial.objects import DOWN, UP, TensorObject


def cofactor_det(rows: list[list[float]]) -> float:
    """Recursive expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0.0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = -1.0 if j % 2 else 1.0
        total += sign * rows[0][j] * cofactor_det(minor)
    return total


def gauss_jordan_inverse(rows: list[list[float]]) -> list[list[float]]:
    """Row reduction with partial pivoting on an augmented matrix."""
    n = len(rows)
    aug = [
        [float(v) for v in row] + [1.0 if i == j else 0.0 for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(aug[r][col]))
        if abs(aug[pivot][col]) == 0.0:
            raise ZeroDivisionError("singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col]
        aug[col] = [v / scale for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0.0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def bucket_slots(written, slots) -> list[int]:
    """Map written indices to slot positions, upper and lower separately."""
    upper = [k for k, v in enumerate(slots) if v is UP]
    lower = [k for k, v in enumerate(slots) if v is DOWN]
    out: list[int] = []
    for spec in written:
        bucket = upper if spec.variance is UP else lower
        out.append(bucket.pop(0))
    return out


def positional_slots(written, slots) -> list[int]:
    return list(range(len(written)))


def naive_eval(statement, bindings, dim, orthogonal=False):
    """Single loop over every letter assignment, one term at a time.

    Returns (array, muladd_counts) where muladd_counts[i] is the number of
    accumulated products for term i.
    """
    mapper = positional_slots if orthogonal else bucket_slots
    target = statement.target
    free = [spec.letter for spec in target.indices] if target else []
    out = np.zeros((dim,) * len(free))
    counts = []
    for term in statement.terms:
        letters: list[str] = []
        placements = []  # per factor: list of (slot, letter or fixed value)
        for f in term.factors:
            obj = bindings[f.name]
            slot_map = mapper(f.indices, obj.slots)
            entries = []
            for spec, slot in zip(f.indices, slot_map):
                if spec.is_fixed:
                    entries.append((slot, int(spec.letter)))
                else:
                    entries.append((slot, spec.letter))
                    if spec.letter not in letters:
                        letters.append(spec.letter)
            placements.append((obj, entries))
        count = 0
        for assign in itertools.product(range(1, dim + 1), repeat=len(letters)):
            env = dict(zip(letters, assign))
            prod = term.coefficient
            for obj, entries in placements:
                idx = [0] * len(entries)
                for slot, ref in entries:
                    idx[slot] = ref if isinstance(ref, int) else env[ref]
                prod *= obj.component(tuple(idx))
            out[tuple(env[l] - 1 for l in free)] += prod
            count += 1
        counts.append(count)
    return out, counts


def direct_law(t: TensorObject, c_rows, gamma_rows, det_gamma: float, weight: int):
    """Transformation law written out as an explicit sum over old indices."""
    d = t.dim
    out = np.zeros(t.components.shape)
    scale = 1.0
    for _ in range(abs(weight)):
        scale = scale * det_gamma if weight > 0 else scale / det_gamma
    for new_idx in itertools.product(range(d), repeat=t.rank):
        total = 0.0
        for old_idx in itertools.product(range(d), repeat=t.rank):
            factor = 1.0
            for k, variance in enumerate(t.slots):
                if variance is UP:
                    factor *= c_rows[new_idx[k]][old_idx[k]]
                else:
                    factor *= gamma_rows[old_idx[k]][new_idx[k]]
            total += factor * float(t.components[old_idx])
        out[new_idx] = total * scale
    return out


def cross3(a, b) -> list[float]:
    return [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]


def dot3(a, b) -> float:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def compose_velocities(b1: float, b2: float) -> float:
    """Relativistic velocity addition along one axis."""
    return (b1 + b2) / (1.0 + b1 * b2)


def conjugation_residual(c, eta) -> float:
    """max |C^T eta C - eta| via explicit triple loops."""
    n = len(c)
    worst = 0.0
    for r in range(n):
        for s in range(n):
            total = 0.0
            for m in range(n):
                for k in range(n):
                    total += c[m][r] * eta[m][k] * c[k][s]
            worst = max(worst, abs(total - eta[r][s]))
    return worst


# ------------------------------------------------- random statement corpus

_FREE_LETTERS = "mnp"
_DUMMY_LETTERS = "rstuv"


def random_statement(rng: np.random.Generator, max_dim: int = 4):
    """Build a random valid statement plus matching bindings.

    Factors are written with their indices in slot order, so the bucket
    mapping is the identity and the naive oracle stays simple.  Rank <= 4,
    at most 4 factors and 3 terms, at most 2 free letters and 2 summed
    pairs per term, occasional fixed digits, coefficients, and a shared
    statement weight.
    """
    from indicial.objects import new_object

    dim = int(rng.integers(2, max_dim + 1))
    n_terms = int(rng.integers(1, 4))
    n_free = int(rng.integers(0, 3))
    free = [
        (_FREE_LETTERS[i], UP if rng.uniform() < 0.5 else DOWN)
        for i in range(n_free)
    ]
    weight = int(rng.integers(-1, 2))

    bindings: dict[str, TensorObject] = {}
    term_texts = []
    for tpos in range(n_terms):
        n_factors = int(rng.integers(1, 5))
        # indices written per factor, in slot order; rank capped at 4
        factor_specs: list[list[tuple[str, object]]] = [[] for _ in range(n_factors)]

        def place(letter: str, variance) -> None:
            open_spots = [i for i in range(n_factors) if len(factor_specs[i]) < 4]
            factor_specs[int(rng.choice(open_spots))].append((letter, variance))

        for letter, variance in free:
            place(letter, variance)
        capacity = 4 * n_factors - n_free
        n_dummy = min(int(rng.integers(0, 3)), capacity // 2)
        for k in range(n_dummy):
            letter = _DUMMY_LETTERS[k]
            place(letter, UP)
            place(letter, DOWN)
        for spots in factor_specs:
            if not spots:
                spots.append(
                    (str(rng.integers(1, dim + 1)), UP if rng.uniform() < 0.5 else DOWN)
                )

        parts = []
        for fpos, spots in enumerate(factor_specs):
            name = f"t{tpos}f{fpos}"
            slots = tuple(v for _, v in spots)
            w = weight if fpos == 0 else 0
            bindings[name] = new_object(
                dim, slots, w, rng.uniform(-1.0, 1.0, size=(dim,) * len(slots))
            )
            text = name
            for letter, variance in spots:
                text += ("^" if variance is UP else "_") + letter
            parts.append(text)
        coeff = float(rng.choice([1.0, 2.0, 0.5, -1.5, 3.0]))
        body = " ".join(parts)
        if coeff != 1.0:
            body = f"{abs(coeff)} * {body}"
        sign = "-" if coeff < 0 else "+"
        term_texts.append((sign, body))

    text = ""
    for k, (sign, body) in enumerate(term_texts):
        if k == 0:
            text = body if sign == "+" else f"- {body}"
        else:
            text += f" {sign} {body}"
    if free:
        target = "out"
        for letter, variance in free:
            target += ("^" if variance is UP else "_") + letter
        text = f"{target} = {text}"
    else:
        text = f"out = {text}"
    return text, bindings, dim

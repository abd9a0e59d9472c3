"""Exact integer linear algebra: the transformation matrices between the
three encodings, Hermite normal form, minor scans, and a rational Phase-I
simplex for nonnegative feasibility.

Matrices carry explicit row and column label tables so that every entry can
be traced back to the subset or conditional pair indexing it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from .encode import StandardImset
from .setfam import GroundSet, eta_pairs, p1_masks

MINOR_BUDGET = 10**7


@dataclass(frozen=True)
class RatVector:
    """A labelled vector of exact rationals."""

    labels: tuple[str, ...]
    values: tuple

    def __post_init__(self) -> None:
        values = tuple(Fraction(v) for v in self.values)
        labels = tuple(self.labels)
        if len(values) != len(labels):
            raise ValueError("labels and values must have equal length")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.values)

    def to_json_dict(self) -> dict:
        return {
            "entries": {
                lab: str(v) for lab, v in zip(self.labels, self.values) if v
            }
        }


@dataclass(frozen=True)
class IntMatrix:
    """A dense integer matrix with row and column label tables."""

    entries: tuple[tuple[int, ...], ...]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        rows = len(self.row_labels)
        cols = len(self.col_labels)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry grid does not match the label tables")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    @classmethod
    def identity(cls, labels: Sequence[str]) -> "IntMatrix":
        n = len(labels)
        return cls(
            tuple(tuple(int(i == j) for j in range(n)) for i in range(n)),
            tuple(labels),
            tuple(labels),
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.col_labels != other.row_labels:
            raise ValueError("inner label tables do not match for multiplication")
        rows, inner = self.shape
        cols = other.shape[1]
        bt = list(zip(*other.entries))
        product = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
            for row in self.entries
        )
        return IntMatrix(product, self.row_labels, other.col_labels)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)), self.col_labels, self.row_labels)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix(
            tuple(tuple(self.entries[i][j] for j in cols) for i in rows),
            tuple(self.row_labels[i] for i in rows),
            tuple(self.col_labels[j] for j in cols),
        )

    def det(self) -> int:
        rows, cols = self.shape
        if rows != cols:
            raise ValueError("determinant needs a square matrix")
        return det_bareiss([list(r) for r in self.entries])

    def to_csv(self) -> str:
        lines = ["," + ",".join(f'"{c}"' for c in self.col_labels)]
        for lab, row in zip(self.row_labels, self.entries):
            lines.append(f'"{lab}",' + ",".join(str(x) for x in row))
        return "\n".join(lines) + "\n"


def det_bareiss(a: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# matrix builders


def build_matrix_A(ground: GroundSet) -> IntMatrix:
    """The eta-to-standard-imset matrix: rows indexed by non-empty subsets T,
    columns by pairs (i|B); on singleton rows the entry marks i, on larger
    rows it is [T = B+i] - [T = B]."""
    pairs = eta_pairs(ground)
    rows = []
    for t in p1_masks(ground):
        row = []
        for i, b in pairs:
            if t.bit_count() == 1:
                row.append(1 if t == (1 << i) else 0)
            else:
                row.append((1 if (b | (1 << i)) == t else 0) - (1 if b == t else 0))
        rows.append(tuple(row))
    return IntMatrix(
        tuple(rows),
        tuple(ground.subset_key(t) for t in p1_masks(ground)),
        tuple(ground.pair_key(i, b) for i, b in pairs),
    )


def build_b_u(u: StandardImset) -> RatVector:
    """Right-hand side paired with build_matrix_A: 1 on singleton rows,
    [T = N] - u(T) on larger rows."""
    ground = u.ground
    values = []
    for t in p1_masks(ground):
        if t.bit_count() == 1:
            values.append(Fraction(1))
        else:
            values.append(Fraction((1 if t == ground.full_mask else 0) - u.values[t]))
    return RatVector(tuple(ground.subset_key(t) for t in p1_masks(ground)), tuple(values))


def build_matrix_B(ground: GroundSet) -> IntMatrix:
    """The eta-to-characteristic matrix: entry 1 exactly when i lies in S and
    B covers the rest of S."""
    pairs = eta_pairs(ground)
    rows = []
    for s in p1_masks(ground):
        row = []
        for i, b in pairs:
            inside = bool((s >> i) & 1)
            covers = (s & ~(1 << i)) & ~b == 0
            row.append(1 if inside and covers else 0)
        rows.append(tuple(row))
    return IntMatrix(
        tuple(rows),
        tuple(ground.subset_key(s) for s in p1_masks(ground)),
        tuple(ground.pair_key(i, b) for i, b in pairs),
    )


def build_matrix_C(ground: GroundSet) -> IntMatrix:
    """Superset-sum matrix with singleton rows left as identity rows."""
    rows = []
    for s in p1_masks(ground):
        if s.bit_count() == 1:
            rows.append(tuple(1 if t == s else 0 for t in p1_masks(ground)))
        else:
            rows.append(tuple(1 if t & s == s else 0 for t in p1_masks(ground)))
    labels = tuple(ground.subset_key(t) for t in p1_masks(ground))
    return IntMatrix(tuple(rows), labels, labels)


def build_matrix_D(ground: GroundSet) -> IntMatrix:
    """Inverse of build_matrix_C: signed superset sums on non-singleton rows."""
    rows = []
    for t in p1_masks(ground):
        if t.bit_count() == 1:
            rows.append(tuple(1 if r == t else 0 for r in p1_masks(ground)))
        else:
            row = []
            for r in p1_masks(ground):
                if t & r == t:
                    row.append((-1) ** ((r & ~t).bit_count()))
                else:
                    row.append(0)
            rows.append(tuple(row))
    labels = tuple(ground.subset_key(t) for t in p1_masks(ground))
    return IntMatrix(tuple(rows), labels, labels)


def build_matrix_B_bar(ground: GroundSet) -> IntMatrix:
    """Containment indicator matrix: entry 1 when the row set lies inside the
    column set."""
    labels = tuple(ground.subset_key(t) for t in p1_masks(ground))
    rows = tuple(
        tuple(1 if s & r == s else 0 for r in p1_masks(ground)) for s in p1_masks(ground)
    )
    return IntMatrix(rows, labels, labels)


def e_column_for_pair(ground: GroundSet, i: int, b: int) -> str:
    """Label of the extended-system column carrying the pair (i|B)."""
    if b == 0:
        return ground.subset_key(1 << i)
    return f"{ground.subset_key(b | (1 << i))}:{ground.subset_key(b)}"


def build_matrix_E(ground: GroundSet, dummy_row: bool = False) -> IntMatrix:
    """Difference-encoding matrix of the extended column system.

    Columns come in two blocks: one per non-empty set R (entry [T = R]) and
    one per pair (C:B) with C = B+i, B non-empty (entries +1 at T = C and
    -1 at T = B).  With dummy_row set, an extra row for the empty set is
    appended holding -1 on every set column and 0 on every pair column, after
    which every column holds exactly one +1 and one -1.
    """
    set_cols = list(p1_masks(ground))
    pair_cols = [(b | (1 << i), b) for i, b in eta_pairs(ground) if b != 0]
    col_labels = [ground.subset_key(r) for r in set_cols] + [
        f"{ground.subset_key(c)}:{ground.subset_key(b)}" for c, b in pair_cols
    ]
    rows = []
    row_labels = []
    for t in p1_masks(ground):
        row = [1 if t == r else 0 for r in set_cols]
        row += [(1 if t == c else 0) - (1 if t == b else 0) for c, b in pair_cols]
        rows.append(tuple(row))
        row_labels.append(ground.subset_key(t))
    if dummy_row:
        rows.append(tuple([-1] * len(set_cols) + [0] * len(pair_cols)))
        row_labels.append(ground.subset_key(0))
    return IntMatrix(tuple(rows), tuple(row_labels), tuple(col_labels))


def build_matrix_F(ground: GroundSet) -> IntMatrix:
    """Inverse of the containment indicator matrix: signed superset sums."""
    rows = []
    for r in p1_masks(ground):
        row = []
        for u in p1_masks(ground):
            if r & u == r:
                row.append((-1) ** ((u & ~r).bit_count()))
            else:
                row.append(0)
        rows.append(tuple(row))
    labels = tuple(ground.subset_key(t) for t in p1_masks(ground))
    return IntMatrix(tuple(rows), labels, labels)


# ---------------------------------------------------------------------------
# Hermite normal form (column style)


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form.

    Returns (H, U) with H = M * U, U unimodular, H in lower staircase shape
    with positive pivots and, left of each pivot, entries reduced into
    [0, pivot).
    """
    rows, cols = m.shape
    h = [list(col) for col in zip(*m.entries)]  # column-major
    u = [[int(j == k) for k in range(cols)] for j in range(cols)]  # columns of U
    pivot_col = 0
    for r in range(rows):
        while True:
            nonzero = [j for j in range(pivot_col, cols) if h[j][r] != 0]
            if not nonzero:
                break
            jbest = min(nonzero, key=lambda j: abs(h[j][r]))
            if jbest != pivot_col:
                h[pivot_col], h[jbest] = h[jbest], h[pivot_col]
                u[pivot_col], u[jbest] = u[jbest], u[pivot_col]
            if h[pivot_col][r] < 0:
                h[pivot_col] = [-x for x in h[pivot_col]]
                u[pivot_col] = [-x for x in u[pivot_col]]
            clean = True
            p = h[pivot_col][r]
            for j in range(pivot_col + 1, cols):
                if h[j][r] != 0:
                    q = h[j][r] // p
                    if q:
                        h[j] = [a - q * b for a, b in zip(h[j], h[pivot_col])]
                        u[j] = [a - q * b for a, b in zip(u[j], u[pivot_col])]
                    if h[j][r] != 0:
                        clean = False
            if clean:
                break
        if nonzero:
            p = h[pivot_col][r]
            for j in range(pivot_col):
                q = h[j][r] // p
                if q:
                    h[j] = [a - q * b for a, b in zip(h[j], h[pivot_col])]
                    u[j] = [a - q * b for a, b in zip(u[j], u[pivot_col])]
            pivot_col += 1
    new_cols = tuple(f"h{k}" for k in range(cols))
    H = IntMatrix(tuple(zip(*h)), m.row_labels, new_cols)
    U = IntMatrix(tuple(zip(*u)), m.col_labels, new_cols)
    return H, U


def hnf_rank(m: IntMatrix) -> int:
    h, _ = hermite_normal_form(m)
    rows, cols = h.shape
    rank = 0
    for j in range(cols):
        if any(h.entries[i][j] != 0 for i in range(rows)):
            rank += 1
    return rank


# ---------------------------------------------------------------------------
# minor scans


@dataclass(frozen=True)
class MinorVerdict:
    """Outcome of a maximal-minor scan.

    unimodular is True or False after an exhaustive scan; a sampled scan that
    found no counterexample reports None (nothing is certified).
    """

    mode: str
    unimodular: bool | None
    minors_checked: int
    witness_cols: tuple[int, ...] | None = None
    witness_det: int | None = None


def is_unimodular_full_row_rank(
    m: IntMatrix,
    mode: str = "exhaustive",
    samples: int = 1000,
    seed: int = 0,
) -> MinorVerdict:
    """Scan maximal minors for values outside {-1, 0, +1}.

    The input must have full row rank (checked through the Hermite form).
    Exhaustive mode refuses jobs with more than 10^7 maximal minors.
    """
    rows, cols = m.shape
    if hnf_rank(m) != rows:
        raise ValueError("matrix does not have full row rank")
    all_rows = tuple(range(rows))
    if mode == "exhaustive":
        total = comb(cols, rows)
        if total > MINOR_BUDGET:
            raise ValueError(
                f"{total} maximal minors exceed the exhaustive budget of {MINOR_BUDGET}; "
                "use sampled mode"
            )
        checked = 0
        for col_pick in combinations(range(cols), rows):
            d = m.submatrix(all_rows, col_pick).det()
            checked += 1
            if abs(d) > 1:
                return MinorVerdict("exhaustive", False, checked, col_pick, d)
        return MinorVerdict("exhaustive", True, checked)
    if mode == "sampled":
        rng = random.Random(seed)
        checked = 0
        for _ in range(samples):
            col_pick = tuple(sorted(rng.sample(range(cols), rows)))
            d = m.submatrix(all_rows, col_pick).det()
            checked += 1
            if abs(d) > 1:
                return MinorVerdict("sampled", False, checked, col_pick, d)
        return MinorVerdict("sampled", None, checked)
    raise ValueError(f"unknown scan mode {mode!r}")


@dataclass(frozen=True)
class TotalUnimodularityVerdict:
    totally_unimodular: bool
    minors_checked: int
    witness_rows: tuple[int, ...] | None = None
    witness_cols: tuple[int, ...] | None = None
    witness_det: int | None = None


def is_totally_unimodular_small(
    m: IntMatrix, max_order: int | None = None
) -> TotalUnimodularityVerdict:
    """Search all square submatrices up to max_order for a determinant
    outside {-1, 0, +1}; returns the first violation certificate found.

    Orders are scanned smallest first, so the witness is minimal in order.
    Refuses jobs with more than 10^7 submatrices.
    """
    rows, cols = m.shape
    if max_order is None:
        max_order = min(rows, cols)
    max_order = min(max_order, rows, cols)
    total = sum(comb(rows, k) * comb(cols, k) for k in range(1, max_order + 1))
    if total > MINOR_BUDGET:
        raise ValueError(
            f"{total} submatrices exceed the scan budget of {MINOR_BUDGET}"
        )
    checked = 0
    for k in range(1, max_order + 1):
        for row_pick in combinations(range(rows), k):
            for col_pick in combinations(range(cols), k):
                d = m.submatrix(row_pick, col_pick).det()
                checked += 1
                if abs(d) > 1:
                    return TotalUnimodularityVerdict(
                        False, checked, row_pick, col_pick, d
                    )
    return TotalUnimodularityVerdict(True, checked)


# ---------------------------------------------------------------------------
# exact nonnegative feasibility (Phase-I simplex, Bland's rule)


def feasible_nonneg_solution(m: IntMatrix, b: RatVector):
    """Find x >= 0 with M x = b exactly, or return None if none exists.

    Phase-I simplex over Fractions with Bland's anti-cycling rule: artificial
    variables start basic, their sum is driven to zero.
    """
    rows, cols = m.shape
    if len(b) != rows:
        raise ValueError("right-hand side length does not match the matrix")
    total = cols + rows
    tableau: list[list[Fraction]] = []
    for i in range(rows):
        row = [Fraction(x) for x in m.entries[i]]
        rhs = b.values[i]
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(0)] * rows
        art[i] = Fraction(1)
        tableau.append(row + art + [rhs])
    basis = [cols + i for i in range(rows)]
    # reduced costs for minimizing the sum of artificials
    reduced = [Fraction(0)] * (total + 1)
    for j in range(total + 1):
        col_sum = sum(tableau[i][j] for i in range(rows))
        cost = Fraction(1) if cols <= j < total else Fraction(0)
        reduced[j] = cost - col_sum
    while True:
        enter = next((j for j in range(total) if reduced[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(rows):
            coef = tableau[i][enter]
            if coef > 0:
                ratio = tableau[i][total] / coef
                if best is None or ratio < best[0] or (
                    ratio == best[0] and basis[i] < basis[best[1]]
                ):
                    best = (ratio, i)
        if best is None:
            raise RuntimeError("phase-one objective unbounded; this cannot happen")
        _, leave = best
        pivot = tableau[leave][enter]
        tableau[leave] = [x / pivot for x in tableau[leave]]
        for i in range(rows):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [x - f * y for x, y in zip(tableau[i], tableau[leave])]
        if reduced[enter] != 0:
            f = reduced[enter]
            reduced = [x - f * y for x, y in zip(reduced, tableau[leave])]
        basis[leave] = enter
    objective = -reduced[total]
    if objective != 0:
        return None
    x = [Fraction(0)] * cols
    for i, var in enumerate(basis):
        if var < cols:
            x[var] = tableau[i][total]
    return RatVector(m.col_labels, tuple(x))

"""Linear constraint families over the three frameworks, the supermodular
cone, kappa coefficients, and the dual cone of superset-closed classes.

Row coefficients and right-hand sides are exact rationals throughout; no
floating point enters any verification path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Iterable, Mapping, Sequence

from .setfam import (
    Antichain,
    GroundSet,
    SetClass,
    bits_of,
    enumerate_antichains,
    eta_pairs,
    minimal_sets,
    p1_masks,
    p2_masks,
    superset_closure,
    union_closure_class,
)

SENSES = (">=", "<=", "=")


class ConeViolationError(RuntimeError):
    """A residual of the decomposition loop left the dual cone."""


@dataclass(frozen=True)
class LinearConstraint:
    """One affine row over a framework's coordinates.

    Keys of coeffs are subset masks for the 'u' and 'c' frameworks and
    (i, B) pairs for 'eta'.  Zero coefficients are dropped on construction.
    """

    framework: str
    coeffs: Mapping
    sense: str
    rhs: Fraction
    tag: str

    def __post_init__(self) -> None:
        if self.framework not in ("eta", "u", "c"):
            raise ValueError(f"unknown framework {self.framework!r}")
        if self.sense not in SENSES:
            raise ValueError(f"unknown sense {self.sense!r}")
        cleaned = {k: Fraction(v) for k, v in dict(self.coeffs).items() if v}
        object.__setattr__(self, "coeffs", cleaned)
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    @property
    def is_vacuous(self) -> bool:
        """True when no coordinate appears (the row reads 0 <sense> rhs)."""
        return not self.coeffs

    def value_at(self, values) -> Fraction:
        """Evaluate the left side; values is a mapping or callable on keys."""
        get: Callable = values if callable(values) else values.__getitem__
        return sum((coef * get(key) for key, coef in self.coeffs.items()), Fraction(0))

    def holds_at(self, values) -> bool:
        lhs = self.value_at(values)
        if self.sense == ">=":
            return lhs >= self.rhs
        if self.sense == "<=":
            return lhs <= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class ConstraintSystem:
    """An ordered bundle of rows sharing one framework and ground set."""

    ground: GroundSet
    framework: str
    rows: tuple[LinearConstraint, ...]

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        for row in rows:
            if row.framework != self.framework:
                raise ValueError(
                    f"row {row.tag!r} belongs to framework {row.framework!r}, "
                    f"not {self.framework!r}"
                )
        object.__setattr__(self, "rows", rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def satisfied_by(self, values) -> bool:
        return all(row.holds_at(values) for row in self.rows)

    def _render_key(self, key) -> str:
        if self.framework == "eta":
            return self.ground.pair_key(*key)
        return self.ground.subset_key(key)

    def to_json_dict(self) -> dict:
        rows = []
        for row in self.rows:
            rows.append(
                {
                    "tag": row.tag,
                    "coeffs": {
                        self._render_key(k): str(v) for k, v in sorted_items(row.coeffs)
                    },
                    "sense": row.sense,
                    "rhs": str(row.rhs),
                }
            )
        return {
            "framework": self.framework,
            "labels": list(self.ground.labels),
            "rows": rows,
        }

    def _variable_name(self, key) -> str:
        if self.framework == "eta":
            i, b = key
            return f"eta_{self.ground.labels[i]}_{_lp_set(self.ground, b)}"
        return f"{self.framework}_{_lp_set(self.ground, key)}"

    def to_lp(self) -> str:
        """LP-format text export; every variable is declared free."""
        lines = [f"\\ constraint system export (framework {self.framework})"]
        lines.append("Minimize")
        lines.append(" obj: 0")
        lines.append("Subject To")
        seen_names: dict[str, int] = {}
        variables: list[str] = []
        var_seen: set[str] = set()
        for row in self.rows:
            name = "".join(ch if ch.isalnum() else "_" for ch in row.tag)
            if name in seen_names:
                seen_names[name] += 1
                name = f"{name}_{seen_names[name]}"
            else:
                seen_names[name] = 0
            if row.is_vacuous:
                lines.append(f"\\ vacuous row {name}: 0 {row.sense} {row.rhs}")
                continue
            terms = []
            for key, coef in sorted_items(row.coeffs):
                var = self._variable_name(key)
                if var not in var_seen:
                    var_seen.add(var)
                    variables.append(var)
                terms.append(f"{'+' if coef >= 0 else '-'} {abs(coef)} {var}")
            body = " ".join(terms).lstrip("+ ")
            sense = row.sense if row.sense != "=" else "="
            lines.append(f" {name}: {body} {sense} {row.rhs}")
        lines.append("Bounds")
        for var in variables:
            lines.append(f" {var} free")
        lines.append("End")
        return "\n".join(lines) + "\n"


def sorted_items(coeffs: Mapping):
    def order(item):
        key = item[0]
        return key if isinstance(key, tuple) else (key,)

    return sorted(coeffs.items(), key=order)


def _lp_set(ground: GroundSet, mask: int) -> str:
    return ground.tag_key(mask) if mask else "0"


# ---------------------------------------------------------------------------
# eta framework


def eta_system(
    ground: GroundSet, families: Sequence[str] = ("nonneg", "equality", "cluster")
) -> ConstraintSystem:
    """Rows characterizing acyclic digraph codes among 0/1 eta vectors:

    * nonneg: every entry at least zero;
    * equality: entries of each variable sum to one;
    * cluster: for each set C with >= 2 members, the entries (i|B) with i in C
      and B disjoint from C sum to at least one.
    """
    rows: list[LinearConstraint] = []
    for family in families:
        if family == "nonneg":
            for i, b in eta_pairs(ground):
                rows.append(
                    LinearConstraint(
                        "eta", {(i, b): 1}, ">=", 0, f"nonneg:{ground.pair_key(i, b)}"
                    )
                )
        elif family == "equality":
            for j in range(ground.n):
                coeffs = {(i, b): 1 for i, b in eta_pairs(ground) if i == j}
                rows.append(
                    LinearConstraint(
                        "eta", coeffs, "=", 1, f"equality:{ground.labels[j]}"
                    )
                )
        elif family == "cluster":
            for c in p2_masks(ground):
                coeffs = {
                    (i, b): 1
                    for i, b in eta_pairs(ground)
                    if (c >> i) & 1 and b & c == 0
                }
                rows.append(
                    LinearConstraint("eta", coeffs, ">=", 1, f"cluster:{ground.tag_key(c)}")
                )
        else:
            raise ValueError(f"unknown eta constraint family {family!r}")
    return ConstraintSystem(ground, "eta", tuple(rows))


# ---------------------------------------------------------------------------
# u framework


def u_equality_system(ground: GroundSet) -> ConstraintSystem:
    """The standardization equalities: total sum zero, and per variable the
    sum over sets containing it zero."""
    rows = [
        LinearConstraint(
            "u", {t: 1 for t in range(1 << ground.n)}, "=", 0, "equality:total"
        )
    ]
    for j in range(ground.n):
        coeffs = {t: 1 for t in range(1 << ground.n) if (t >> j) & 1}
        rows.append(LinearConstraint("u", coeffs, "=", 0, f"equality:{ground.labels[j]}"))
    return ConstraintSystem(ground, "u", tuple(rows))


def specific_constraint(antichain: Antichain) -> LinearConstraint:
    """Sum of u over the superset closure of the antichain is at most one."""
    closure = superset_closure(antichain)
    coeffs = {t: 1 for t in closure}
    return LinearConstraint("u", coeffs, "<=", 1, f"specific:{antichain.tag()}")


def cluster_constraint_u(ground: GroundSet, c: int) -> LinearConstraint:
    """Weighted row: sum of u(T)(|C cap T| - 1) over |C cap T| >= 2 is
    nonnegative."""
    ground.check_mask(c)
    if c.bit_count() < 2:
        raise ValueError("cluster rows need a set with at least two members")
    coeffs = {}
    for t in range(1 << ground.n):
        k = (t & c).bit_count()
        if k >= 2:
            coeffs[t] = k - 1
    return LinearConstraint("u", coeffs, ">=", 0, f"cluster-u:{ground.tag_key(c)}")


# ---------------------------------------------------------------------------
# kappa coefficients and the c framework


@dataclass(frozen=True, eq=True)
class KappaCoefficients:
    """Integer coefficients supported on the union closure of an antichain,
    determined by: on the closure, partial sums over subsets equal one."""

    antichain: Antichain
    entries: tuple[tuple[int, int], ...]

    def value(self, mask: int) -> int:
        for m, v in self.entries:
            if m == mask:
                return v
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def kappa_coefficients(antichain: Antichain) -> KappaCoefficients:
    """Recursive computation over the union closure, ascending by size:
    kappa(S) = 1 - sum of kappa(T) over closure members T strictly inside S."""
    closure = union_closure_class(antichain).members
    order = sorted(closure, key=lambda m: (m.bit_count(), m))
    values: dict[int, int] = {}
    for s in order:
        total = 0
        for t in order:
            if t != s and t & s == t:
                total += values[t]
        values[s] = 1 - total
    entries = tuple((m, values[m]) for m in order)
    return KappaCoefficients(antichain, entries)


def char_specific_constraint(antichain: Antichain) -> LinearConstraint:
    """The specific row rewritten over characteristic coordinates.

    Entries of the kappa vector on subsets with fewer than two members are
    folded into the right-hand side using the tacit value 1 there.  The row
    can come out vacuous (no coordinates left), which is flagged by
    LinearConstraint.is_vacuous.
    """
    kappa = kappa_coefficients(antichain)
    coeffs: dict[int, int] = {}
    rhs = 0
    for mask, v in kappa.entries:
        if mask.bit_count() >= 2:
            coeffs[mask] = v
        else:
            rhs -= v
    return LinearConstraint(
        "c", coeffs, ">=", rhs, f"kappa-specific:{antichain.tag()}"
    )


def cluster_constraint_c(ground: GroundSet, c: int) -> LinearConstraint:
    """Cluster row over characteristic coordinates:

        |C| - 1 - sum over S inside C, |S| >= 2, of (-1)^|S| c(S)  >=  0.
    """
    ground.check_mask(c)
    if c.bit_count() < 2:
        raise ValueError("cluster rows need a set with at least two members")
    coeffs = {}
    sub = c
    while True:
        if sub.bit_count() >= 2:
            coeffs[sub] = 1 if sub.bit_count() % 2 else -1
        if sub == 0:
            break
        sub = (sub - 1) & c
    return LinearConstraint(
        "c", coeffs, ">=", 1 - c.bit_count(), f"cluster-c:{ground.tag_key(c)}"
    )


# ---------------------------------------------------------------------------
# supermodular functions and the nonspecific family


@dataclass(frozen=True)
class SupermodularFunction:
    """A set function given densely over all subsets (index = mask)."""

    ground: GroundSet
    values: tuple

    def __post_init__(self) -> None:
        values = tuple(Fraction(v) for v in self.values)
        if len(values) != 1 << self.ground.n:
            raise ValueError(
                f"set function needs {1 << self.ground.n} entries, got {len(values)}"
            )
        object.__setattr__(self, "values", values)

    def value(self, mask: int) -> Fraction:
        self.ground.check_mask(mask)
        return self.values[mask]

    def is_standardized(self) -> bool:
        return all(
            self.values[m] == 0 for m in range(1 << self.ground.n) if m.bit_count() <= 1
        )

    def to_json_dict(self) -> dict:
        entries = {}
        for m, v in enumerate(self.values):
            if v:
                if v.denominator != 1:
                    raise ValueError(
                        "only integer-valued set functions serialize; "
                        "normalize the vector first"
                    )
                entries[self.ground.subset_key(m)] = int(v)
        return {"entries": entries}


def is_supermodular(m: SupermodularFunction) -> bool:
    """Check every elementary exchange
    m(C+i+j) + m(C) >= m(C+i) + m(C+j)."""
    n = m.ground.n
    v = m.values
    for i in range(n):
        for j in range(i + 1, n):
            rest = m.ground.full_mask & ~(1 << i) & ~(1 << j)
            c = 0
            while True:
                if v[c | (1 << i) | (1 << j)] + v[c] < v[c | (1 << i)] + v[c | (1 << j)]:
                    return False
                if c == rest:
                    break
                c = (c - rest) & rest
    return True


def cluster_supermodular(ground: GroundSet, c: int) -> SupermodularFunction:
    """m(T) = max(0, |C cap T| - 1)."""
    ground.check_mask(c)
    if c.bit_count() < 2:
        raise ValueError("cluster functions need a set with at least two members")
    values = [max(0, (t & c).bit_count() - 1) for t in range(1 << ground.n)]
    return SupermodularFunction(ground, tuple(values))


def indicator_supermodular(ground: GroundSet, s: int) -> SupermodularFunction:
    """m(T) = 1 if T contains S else 0."""
    ground.check_mask(s)
    if s.bit_count() < 2:
        raise ValueError(
            "superset indicators of sets with fewer than two members are not "
            "standardized"
        )
    values = [1 if t & s == s else 0 for t in range(1 << ground.n)]
    return SupermodularFunction(ground, tuple(values))


def pairing(m: SupermodularFunction, u_values: Sequence) -> Fraction:
    """The bilinear pairing: sum over subsets of m(T) u(T)."""
    return sum(
        (mv * uv for mv, uv in zip(m.values, u_values) if mv), Fraction(0)
    )


def nonspecific_constraints(
    ground: GroundSet, rays: Sequence[SupermodularFunction]
) -> ConstraintSystem:
    """One row per extreme ray: the pairing with u is nonnegative."""
    rows = []
    for k, ray in enumerate(rays):
        if ray.ground != ground:
            raise ValueError("ray ground set does not match")
        coeffs = {t: v for t, v in enumerate(ray.values) if v}
        rows.append(LinearConstraint("u", coeffs, ">=", 0, f"nonspecific:{k}"))
    return ConstraintSystem(ground, "u", tuple(rows))


def _normalize_int_vector(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, keeping its direction."""
    fracs = [Fraction(x) for x in vec]
    den = 1
    for f in fracs:
        den = lcm(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def _rational_inverse(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    d = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(k == r)) for k in range(d)]
           for r, row in enumerate(rows)]
    for col in range(d):
        pivot = next((r for r in range(col, d) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[d:] for row in aug]


def _row_rank(rows: list[tuple]) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                f = work[r][col] / pv
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def double_description(rows: list[tuple[int, ...]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {x : r.x >= 0 for every row r}.

    Incremental insertion with the combinatorial adjacency test; exact
    integer arithmetic with coprime normalization of every ray.
    """
    # initial simplicial cone from dim linearly independent rows
    basis_idx: list[int] = []
    staged: list[tuple[int, ...]] = []
    for idx, row in enumerate(rows):
        if _row_rank(staged + [row]) > len(basis_idx):
            basis_idx.append(idx)
            staged.append(row)
        if len(basis_idx) == dim:
            break
    if len(basis_idx) < dim:
        raise ValueError("cone is not pointed (constraint rows do not have full rank)")
    inverse = _rational_inverse([list(rows[i]) for i in basis_idx])
    rays = [
        _normalize_int_vector([inverse[r][kcol] for r in range(dim)])
        for kcol in range(dim)
    ]
    processed = list(basis_idx)
    remaining = [i for i in range(len(rows)) if i not in set(basis_idx)]

    def dot(row: tuple[int, ...], ray: tuple[int, ...]) -> int:
        return sum(a * b for a, b in zip(row, ray))

    for idx in remaining:
        row = rows[idx]
        dots = [dot(row, ray) for ray in rays]
        if all(d >= 0 for d in dots):
            processed.append(idx)
            continue
        active = [
            frozenset(p for p in processed if dot(rows[p], ray) == 0) for ray in rays
        ]
        pos = [k for k, d in enumerate(dots) if d > 0]
        zero = [k for k, d in enumerate(dots) if d == 0]
        neg = [k for k, d in enumerate(dots) if d < 0]
        new_rays: list[tuple[int, ...]] = []
        for p in pos:
            for q in neg:
                common = active[p] & active[q]
                adjacent = True
                for r in range(len(rays)):
                    if r != p and r != q and common <= active[r]:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = [
                    dots[p] * rays[q][k] - dots[q] * rays[p][k]
                    for k in range(dim)
                ]
                new_rays.append(_normalize_int_vector(combo))
        rays = [rays[k] for k in pos + zero] + new_rays
        processed.append(idx)
    return sorted(set(rays))


def _exchange_rows_p2(ground: GroundSet) -> list[tuple[int, ...]]:
    """Elementary exchange inequalities restricted to the coordinates on
    subsets with >= 2 members (entries on smaller subsets are zero there)."""
    masks = p2_masks(ground)
    index = {m: k for k, m in enumerate(masks)}
    rows = []
    for i in range(ground.n):
        for j in range(i + 1, ground.n):
            rest = ground.full_mask & ~(1 << i) & ~(1 << j)
            c = 0
            while True:
                vec = [0] * len(masks)
                for mask, sign in (
                    (c | (1 << i) | (1 << j), 1),
                    (c, 1),
                    (c | (1 << i), -1),
                    (c | (1 << j), -1),
                ):
                    if mask.bit_count() >= 2:
                        vec[index[mask]] += sign
                rows.append(tuple(vec))
                if c == rest:
                    break
                c = (c - rest) & rest
    return rows


def _builtin_rays_n3(ground: GroundSet) -> list[SupermodularFunction]:
    pair_masks = [m for m in p2_masks(ground) if m.bit_count() == 2]
    rays = [indicator_supermodular(ground, m) for m in pair_masks]
    rays.append(indicator_supermodular(ground, ground.full_mask))
    rays.append(cluster_supermodular(ground, ground.full_mask))
    return rays


def supermodular_rays(
    ground: GroundSet, source: str = "builtin", long_run: bool = False
) -> list[SupermodularFunction]:
    """Extreme rays of the cone of standardized supermodular functions,
    normalized to coprime integers.

    source is 'builtin' (n=3 only), 'computed' (exact double description,
    n <= 4, or n = 5 with long_run set), or a path to a ray file.  File rays
    are re-validated for supermodularity and standardization; extremality of
    file rays is trusted, not re-verified.
    """
    if source == "builtin":
        if ground.n != 3:
            raise ValueError("builtin rays are available for n = 3 only")
        return _builtin_rays_n3(ground)
    if source == "computed":
        if ground.n > 5 or (ground.n == 5 and not long_run):
            raise ValueError(
                "computed rays are limited to n <= 4 (n = 5 needs long_run=True)"
            )
        masks = p2_masks(ground)
        rows = _exchange_rows_p2(ground)
        rays_p2 = double_description(rows, len(masks))
        out = []
        for vec in rays_p2:
            values = [0] * (1 << ground.n)
            for mask, v in zip(masks, vec):
                values[mask] = v
            out.append(SupermodularFunction(ground, tuple(values)))
        return out
    return load_ray_file(ground, source)


def load_ray_file(ground: GroundSet, path) -> list[SupermodularFunction]:
    """Read a JSON list of {"entries": {subset-key: int}} ray records."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read ray file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"ray file is not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise ValueError("ray file must contain a JSON list of ray records")
    rays = []
    for k, record in enumerate(data):
        if not isinstance(record, dict) or "entries" not in record:
            raise ValueError(f"ray record {k} is missing its 'entries' table")
        values = [0] * (1 << ground.n)
        for key, v in record["entries"].items():
            values[ground.parse_subset(key)] = int(v)
        ray = SupermodularFunction(ground, _normalize_int_vector(values))
        if not ray.is_standardized():
            raise ValueError(f"ray record {k} is not standardized")
        if not is_supermodular(ray):
            raise ValueError(f"ray record {k} is not supermodular")
        rays.append(ray)
    return rays


def save_ray_file(rays: Sequence[SupermodularFunction], path) -> None:
    data = [ray.to_json_dict() for ray in rays]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, ensure_ascii=False, indent=1, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# dual cone of superset-closed classes


@dataclass(frozen=True)
class DualVector:
    """A rational vector over the non-empty subsets (index = mask; the entry
    at mask 0 must stay zero)."""

    ground: GroundSet
    values: tuple

    def __post_init__(self) -> None:
        values = tuple(Fraction(v) for v in self.values)
        if len(values) != 1 << self.ground.n:
            raise ValueError(
                f"dual vector needs {1 << self.ground.n} entries, got {len(values)}"
            )
        if values[0] != 0:
            raise ValueError("dual vectors carry no entry at the empty set")
        object.__setattr__(self, "values", values)

    def value(self, mask: int) -> Fraction:
        self.ground.check_mask(mask)
        return self.values[mask]

    def to_json_dict(self) -> dict:
        entries = {
            self.ground.subset_key(m): str(v)
            for m, v in enumerate(self.values)
            if v
        }
        return {"labels": list(self.ground.labels), "entries": entries}

    @classmethod
    def from_json_dict(cls, data: dict) -> "DualVector":
        try:
            ground = GroundSet(tuple(data["labels"]))
            entries = data["entries"]
        except (KeyError, TypeError):
            raise ValueError("dual vector JSON needs 'labels' and 'entries'") from None
        values = [Fraction(0)] * (1 << ground.n)
        for key, v in entries.items():
            mask = ground.parse_subset(key)
            if mask == 0:
                raise ValueError("dual vectors carry no entry at the empty set")
            values[mask] = Fraction(v)
        return cls(ground, tuple(values))


def y_of_class(antichain: Antichain) -> DualVector:
    """The extreme dual vector of a superset-closed class: indicator of the
    closure, corrected by the number of proper singleton members below."""
    ground = antichain.ground
    closure = set(superset_closure(antichain).members)
    singletons = [m for m in closure if m.bit_count() == 1]
    values = [Fraction(0)] * (1 << ground.n)
    for t in p1_masks(ground):
        v = 1 if t in closure else 0
        v -= sum(1 for s in singletons if s != t and s & t == s)
        values[t] = Fraction(v)
    return DualVector(ground, tuple(values))


def _dual_cone_violation(y: DualVector):
    """First violated membership condition, or None.

    Conditions: singletons nonnegative; for |S| = 2 and i in S,
    y(S) + y({i}) >= 0; for |S| >= 3 and i in S,
    y(S) + y({i}) - y(S minus i) >= 0.
    """
    ground = y.ground
    for t in sorted(p1_masks(ground), key=lambda m: (m.bit_count(), m)):
        size = t.bit_count()
        if size == 1:
            if y.values[t] < 0:
                return ("singleton", t)
        elif size == 2:
            for i in bits_of(t):
                if y.values[t] + y.values[1 << i] < 0:
                    return ("pair", t, i)
        else:
            for i in bits_of(t):
                if y.values[t] + y.values[1 << i] - y.values[t & ~(1 << i)] < 0:
                    return ("general", t, i)
    return None


def check_dual_cone(y: DualVector) -> bool:
    """Membership test for the cone dual to the specific rows."""
    return _dual_cone_violation(y) is None


def conic_decompose(y: DualVector) -> list[tuple[Antichain, Fraction]]:
    """Write a dual-cone member as a positive combination of extreme vectors
    y_A over superset-closed classes A.

    Each pass closes the support upward, peels off the minimum over the
    minimal sets, and repeats; the support class strictly shrinks, so the
    loop ends.  Raises ValueError if the input is outside the cone and
    ConeViolationError if a residual ever leaves it (which would indicate a
    bug, not bad input).
    """
    if not check_dual_cone(y):
        raise ValueError("input vector is outside the dual cone")
    ground = y.ground
    current = list(y.values)
    terms: list[tuple[Antichain, Fraction]] = []
    while any(current):
        support = [t for t in p1_masks(ground) if current[t] != 0]
        closure_members = sorted(
            {s for s in p1_masks(ground) if any(t & s == t for t in support)}
        )
        closure = SetClass(ground, tuple(closure_members))
        mins = minimal_sets(closure)
        beta = min(current[t] for t in mins)
        if beta <= 0:
            raise ConeViolationError(
                "minimal-set minimum is not positive; residual left the cone"
            )
        extreme = y_of_class(mins)
        for t in p1_masks(ground):
            current[t] -= beta * extreme.values[t]
        residual = DualVector(ground, tuple(current))
        if not check_dual_cone(residual):
            raise ConeViolationError("residual left the dual cone")
        terms.append((mins, Fraction(beta)))
    return terms


# ---------------------------------------------------------------------------
# system assembly over a whole framework

ETA_FAMILIES = ("nonneg", "equality", "cluster")
U_FAMILIES = ("equality", "specific", "nonspecific", "cluster-u")
C_FAMILIES = ("kappa-specific", "cluster-c")


def assemble_system(
    ground: GroundSet,
    framework: str,
    families: Sequence[str],
    rays: Sequence[SupermodularFunction] | None = None,
) -> ConstraintSystem:
    """Build the requested constraint families in their canonical order.

    The 'nonspecific' family needs rays: pass them, or they default to the
    builtin list at n = 3 and the computed list at n <= 4.
    """
    if framework == "eta":
        for f in families:
            if f not in ETA_FAMILIES:
                raise ValueError(f"unknown eta constraint family {f!r}")
        return eta_system(ground, families)
    rows: list[LinearConstraint] = []
    if framework == "u":
        for family in families:
            if family == "equality":
                rows.extend(u_equality_system(ground).rows)
            elif family == "specific":
                for antichain in enumerate_antichains(ground):
                    rows.append(specific_constraint(antichain))
            elif family == "nonspecific":
                if rays is None:
                    source = "builtin" if ground.n == 3 else "computed"
                    rays = supermodular_rays(ground, source)
                rows.extend(nonspecific_constraints(ground, rays).rows)
            elif family == "cluster-u":
                for c in p2_masks(ground):
                    rows.append(cluster_constraint_u(ground, c))
            else:
                raise ValueError(f"unknown u constraint family {family!r}")
        return ConstraintSystem(ground, "u", tuple(rows))
    if framework == "c":
        for family in families:
            if family == "kappa-specific":
                for antichain in enumerate_antichains(ground):
                    rows.append(char_specific_constraint(antichain))
            elif family == "cluster-c":
                for c in p2_masks(ground):
                    rows.append(cluster_constraint_c(ground, c))
            else:
                raise ValueError(f"unknown c constraint family {family!r}")
        return ConstraintSystem(ground, "c", tuple(rows))
    raise ValueError(f"unknown framework {framework!r}")

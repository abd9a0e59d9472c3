"""Vector encodings of directed-graph structure and the maps between them.

Three codes live here:

* EtaVector: one 0/1 (or general integer) entry per conditional pair (i|B),
  set to 1 exactly when B is the parent set of i;
* StandardImset: an integer function on all subsets of the ground set;
* CharacteristicImset: an integer function on the subsets with at least two
  members, with the tacit convention that it equals 1 on smaller subsets.

The transforms implemented below form a commuting triangle on inputs whose
eta entries sum to one per variable (every graph code does).
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import DirectedGraph, is_acyclic, super_terminal_count
from .setfam import (
    GroundSet,
    bits_of,
    eta_pairs,
    p2_index,
    p2_masks,
    pair_index,
)


def superset_zeta(values: list, n: int) -> list:
    """p[S] = sum of values[T] over T containing S (in-place butterfly)."""
    v = list(values)
    for b in range(n):
        bit = 1 << b
        for s in range(1 << n):
            if not s & bit:
                v[s] += v[s | bit]
    return v


def superset_moebius(values: list, n: int) -> list:
    """Inverse of superset_zeta: alternating sum over supersets."""
    v = list(values)
    for b in range(n):
        bit = 1 << b
        for s in range(1 << n):
            if not s & bit:
                v[s] -= v[s | bit]
    return v


@dataclass(frozen=True)
class EtaVector:
    """Integer vector indexed by conditional pairs (i|B), canonical order."""

    ground: GroundSet
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        expect = self.ground.n * (1 << (self.ground.n - 1))
        if len(values) != expect:
            raise ValueError(f"eta vector needs {expect} entries, got {len(values)}")
        object.__setattr__(self, "values", values)

    def value(self, i: int, b: int) -> int:
        return self.values[pair_index(self.ground, i, b)]

    def to_json_dict(self) -> dict:
        ground = self.ground
        entries = {}
        for (i, b), v in zip(eta_pairs(ground), self.values):
            if v:
                entries[ground.pair_key(i, b)] = v
        return {"labels": list(ground.labels), "kind": "eta", "entries": entries}


@dataclass(frozen=True)
class StandardImset:
    """Integer function on all subsets; values[mask] is the entry at mask."""

    ground: GroundSet
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        if len(values) != 1 << self.ground.n:
            raise ValueError(
                f"standard imset needs {1 << self.ground.n} entries, got {len(values)}"
            )
        object.__setattr__(self, "values", values)

    def value(self, mask: int) -> int:
        self.ground.check_mask(mask)
        return self.values[mask]

    def is_standardized(self) -> bool:
        """Total sum zero and, for each variable, the sum over sets containing
        it zero."""
        if sum(self.values) != 0:
            return False
        for j in range(self.ground.n):
            bit = 1 << j
            if sum(v for m, v in enumerate(self.values) if m & bit) != 0:
                return False
        return True

    def to_json_dict(self) -> dict:
        entries = {
            self.ground.subset_key(m): v for m, v in enumerate(self.values) if v
        }
        return {"labels": list(self.ground.labels), "kind": "standard", "entries": entries}


@dataclass(frozen=True)
class Portrait:
    """Superset-sum transform of a standard imset (one entry per subset)."""

    ground: GroundSet
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        if len(values) != 1 << self.ground.n:
            raise ValueError(
                f"portrait needs {1 << self.ground.n} entries, got {len(values)}"
            )
        object.__setattr__(self, "values", values)

    def value(self, mask: int) -> int:
        self.ground.check_mask(mask)
        return self.values[mask]


@dataclass(frozen=True)
class CharacteristicImset:
    """Integer function on subsets with >= 2 members (ascending mask order);
    reads as 1 on smaller subsets."""

    ground: GroundSet
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        if len(values) != len(p2_masks(self.ground)):
            raise ValueError(
                f"characteristic imset needs {len(p2_masks(self.ground))} entries, "
                f"got {len(values)}"
            )
        object.__setattr__(self, "values", values)

    def value(self, mask: int) -> int:
        self.ground.check_mask(mask)
        if mask.bit_count() <= 1:
            return 1
        return self.values[p2_index(self.ground)[mask]]

    def to_json_dict(self) -> dict:
        entries = {
            self.ground.subset_key(m): v
            for m, v in zip(p2_masks(self.ground), self.values)
            if v
        }
        return {
            "labels": list(self.ground.labels),
            "kind": "characteristic",
            "entries": entries,
        }


def basic_vector(ground: GroundSet, a: int) -> StandardImset:
    """The indicator of a single subset."""
    ground.check_mask(a)
    values = [0] * (1 << ground.n)
    values[a] = 1
    return StandardImset(ground, tuple(values))


def semi_elementary_imset(ground: GroundSet, a: int, b: int, c: int) -> StandardImset:
    """The imset with +1 at C and A|B|C, -1 at A|C and B|C.

    A, B, C must be pairwise disjoint; the result is the zero imset exactly
    when A or B is empty.
    """
    for m in (a, b, c):
        ground.check_mask(m)
    if a & b or a & c or b & c:
        raise ValueError("the three component sets must be pairwise disjoint")
    values = [0] * (1 << ground.n)
    values[c] += 1
    values[a | c] -= 1
    values[b | c] -= 1
    values[a | b | c] += 1
    return StandardImset(ground, tuple(values))


def eta_of(g: DirectedGraph) -> EtaVector:
    """The 0/1 code of a digraph: 1 at (i|B) iff B is the parent set of i."""
    ground = g.ground
    values = [0] * (ground.n * (1 << (ground.n - 1)))
    for i, p in enumerate(g.parents):
        values[pair_index(ground, i, p)] = 1
    return EtaVector(ground, tuple(values))


def standard_imset_of(g: DirectedGraph) -> StandardImset:
    """Standard imset of an acyclic digraph.

    Rejects cyclic input; use u_from_eta(eta_of(g)) for the formal value on
    an arbitrary digraph code.
    """
    if not is_acyclic(g):
        raise ValueError("standard imsets are defined for acyclic graphs only")
    return u_from_eta(eta_of(g))


def u_from_eta(eta: EtaVector) -> StandardImset:
    """Linear extension of the graph-to-standard-imset map to any eta vector:

        u(T) = [T=N] - [T=empty] + sum over (i|B) of eta(i|B)([T=B] - [T=B+i])
    """
    ground = eta.ground
    values = [0] * (1 << ground.n)
    values[ground.full_mask] += 1
    values[0] -= 1
    for (i, b), v in zip(eta_pairs(ground), eta.values):
        if v:
            values[b] += v
            values[b | (1 << i)] -= v
    return StandardImset(ground, tuple(values))


def portrait_of(u: StandardImset) -> Portrait:
    """p(S) = sum of u(T) over supersets T of S."""
    return Portrait(u.ground, tuple(superset_zeta(list(u.values), u.ground.n)))


def characteristic_of(u: StandardImset) -> CharacteristicImset:
    """c(S) = 1 - p(S) on subsets with >= 2 members.

    Requires a standardized input, which is exactly the condition making the
    tacit value 1 on smaller subsets consistent with the same formula.
    """
    if not u.is_standardized():
        raise ValueError("characteristic imsets require a standardized input")
    p = superset_zeta(list(u.values), u.ground.n)
    return CharacteristicImset(
        u.ground, tuple(1 - p[m] for m in p2_masks(u.ground))
    )


def u_from_characteristic(c: CharacteristicImset) -> StandardImset:
    """Inverse of characteristic_of:

        u(T) = sum over supersets S of T of (-1)^(|S|-|T|) (1 - c(S)),

    with c read as 1 on subsets of fewer than two members.  The result always
    satisfies the standardization equalities.
    """
    ground = c.ground
    # the superset-sum transform of a standardized vector is 0 on subsets
    # with fewer than two members, so 1 - c vanishes there by the convention
    p = [0] * (1 << ground.n)
    for m, v in zip(p2_masks(ground), c.values):
        p[m] = 1 - v
    return StandardImset(ground, tuple(superset_moebius(p, ground.n)))


def char_from_eta(eta: EtaVector) -> CharacteristicImset:
    """Direct route from an eta vector to its characteristic values:

        c(S) = sum over i in S, B covering S-minus-i, of eta(i|B).

    On a digraph code this counts the members of S whose parents cover the
    rest of S.
    """
    ground = eta.ground
    n = ground.n
    out = []
    for s in p2_masks(ground):
        total = 0
        for i in bits_of(s):
            rest = s & ~(1 << i)
            free = ground.full_mask & ~(1 << i) & ~rest
            sub = 0
            while True:
                total += eta.values[pair_index(ground, i, rest | sub)]
                if sub == free:
                    break
                sub = (sub - free) & free
        out.append(total)
    return CharacteristicImset(ground, tuple(out))


def quasi_characteristic_of(g: DirectedGraph) -> CharacteristicImset:
    """Characteristic values of an arbitrary digraph via super-terminal
    counting; agrees with char_from_eta(eta_of(g))."""
    ground = g.ground
    return CharacteristicImset(
        ground, tuple(super_terminal_count(g, s) for s in p2_masks(ground))
    )


def markov_equivalent(g: DirectedGraph, h: DirectedGraph) -> bool:
    """Whether two acyclic digraphs carry the same standard imset."""
    if g.ground != h.ground:
        raise ValueError("graphs must share a ground set")
    if not is_acyclic(g) or not is_acyclic(h):
        raise ValueError("equivalence testing is defined for acyclic graphs only")
    return standard_imset_of(g) == standard_imset_of(h)


def imset_to_json_dict(obj) -> dict:
    return obj.to_json_dict()


def imset_from_json_dict(data: dict):
    """Rebuild an EtaVector, StandardImset, or CharacteristicImset from its
    JSON dict form (zero entries omitted)."""
    try:
        ground = GroundSet(tuple(data["labels"]))
        kind = data["kind"]
        entries = data["entries"]
    except (KeyError, TypeError):
        raise ValueError("imset JSON needs 'labels', 'kind' and 'entries'") from None
    if kind == "eta":
        values = [0] * (ground.n * (1 << (ground.n - 1)))
        for key, v in entries.items():
            i, b = ground.parse_pair(key)
            values[pair_index(ground, i, b)] = int(v)
        return EtaVector(ground, tuple(values))
    if kind == "standard":
        values = [0] * (1 << ground.n)
        for key, v in entries.items():
            values[ground.parse_subset(key)] = int(v)
        return StandardImset(ground, tuple(values))
    if kind == "characteristic":
        values = [0] * len(p2_masks(ground))
        index = p2_index(ground)
        for key, v in entries.items():
            mask = ground.parse_subset(key)
            if mask.bit_count() < 2:
                raise ValueError(
                    "characteristic imset entries need subsets with >= 2 members"
                )
            values[index[mask]] = int(v)
        return CharacteristicImset(ground, tuple(values))
    raise ValueError(f"unknown imset kind {kind!r}")

"""Subset classes and antichains over a small ground set.

Subsets of the ground set are plain Python ints used as bitmasks, with
variable k occupying bit k.  Every ordering in this package is ascending
bitmask value, which keeps deduplication and array indexing canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

MAX_GROUND = 6

EMPTY_KEY = "∅"


def bits_of(mask: int) -> Iterator[int]:
    """Yield the bit positions set in mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def squeeze_bit(mask: int, i: int) -> int:
    """Drop bit i from mask and shift higher bits down one slot."""
    low = mask & ((1 << i) - 1)
    return low | ((mask >> (i + 1)) << i)


def unsqueeze_bit(packed: int, i: int) -> int:
    """Inverse of squeeze_bit: reopen slot i (left unset)."""
    low = packed & ((1 << i) - 1)
    return low | ((packed >> i) << (i + 1))


@dataclass(frozen=True)
class GroundSet:
    """The variable set, fixing labels and the bitmask universe."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        n = len(self.labels)
        if not 2 <= n <= MAX_GROUND:
            raise ValueError(
                f"ground set needs between 2 and {MAX_GROUND} variables, got {n}"
            )
        if len(set(self.labels)) != n:
            raise ValueError("ground set labels must be pairwise distinct")

    @classmethod
    def of_size(cls, n: int) -> "GroundSet":
        return cls(tuple("abcdef")[:n])

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def subsets(self, min_card: int = 0) -> Iterator[int]:
        """All subsets as masks, ascending, with at least min_card members."""
        for mask in range(1 << self.n):
            if mask.bit_count() >= min_card:
                yield mask

    def check_mask(self, mask: int) -> int:
        if not 0 <= mask <= self.full_mask:
            raise ValueError(f"mask {mask} outside the {self.n}-variable universe")
        return mask

    def subset_key(self, mask: int) -> str:
        """Serialize a subset as its sorted labels joined by commas."""
        self.check_mask(mask)
        if mask == 0:
            return EMPTY_KEY
        return ",".join(sorted(self.labels[i] for i in bits_of(mask)))

    def parse_subset(self, key: str) -> int:
        key = key.strip()
        if key in ("", EMPTY_KEY):
            return 0
        mask = 0
        for part in key.split(","):
            part = part.strip()
            try:
                i = self.labels.index(part)
            except ValueError:
                raise ValueError(f"unknown variable label {part!r}") from None
            if mask & (1 << i):
                raise ValueError(f"variable {part!r} repeated in subset key {key!r}")
            mask |= 1 << i
        return mask

    def pair_key(self, i: int, b: int) -> str:
        """Serialize a conditional pair (i|B)."""
        if not 0 <= i < self.n:
            raise ValueError(f"variable index {i} out of range")
        if b & (1 << i):
            raise ValueError("conditioning set of a pair may not contain the variable")
        return f"{self.labels[i]}|{self.subset_key(b)}"

    def parse_pair(self, key: str) -> tuple[int, int]:
        head, sep, tail = key.partition("|")
        if not sep:
            raise ValueError(f"pair key {key!r} is missing the '|' separator")
        head = head.strip()
        try:
            i = self.labels.index(head)
        except ValueError:
            raise ValueError(f"unknown variable label {head!r}") from None
        b = self.parse_subset(tail)
        if b & (1 << i):
            raise ValueError(f"pair key {key!r} conditions on its own variable")
        return i, b

    def tag_key(self, mask: int) -> str:
        """Compact subset rendering for constraint tags (labels concatenated)."""
        self.check_mask(mask)
        if mask == 0:
            return EMPTY_KEY
        return "".join(self.labels[i] for i in bits_of(mask))


@lru_cache(maxsize=None)
def p1_masks(ground: GroundSet) -> tuple[int, ...]:
    """Non-empty subsets, ascending."""
    return tuple(range(1, 1 << ground.n))


@lru_cache(maxsize=None)
def p2_masks(ground: GroundSet) -> tuple[int, ...]:
    """Subsets with at least two members, ascending."""
    return tuple(m for m in range(1 << ground.n) if m.bit_count() >= 2)


@lru_cache(maxsize=None)
def p2_index(ground: GroundSet) -> dict[int, int]:
    return {m: k for k, m in enumerate(p2_masks(ground))}


@lru_cache(maxsize=None)
def eta_pairs(ground: GroundSet) -> tuple[tuple[int, int], ...]:
    """Canonical order of conditional pairs (i|B): by i, then by B ascending."""
    out = []
    for i in range(ground.n):
        for packed in range(1 << (ground.n - 1)):
            out.append((i, unsqueeze_bit(packed, i)))
    return tuple(out)


def pair_index(ground: GroundSet, i: int, b: int) -> int:
    if b & (1 << i):
        raise ValueError("conditioning set of a pair may not contain the variable")
    return i * (1 << (ground.n - 1)) + squeeze_bit(b, i)


@dataclass(frozen=True)
class SetClass:
    """A class of subsets, stored in canonical ascending order."""

    ground: GroundSet
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(set(self.members)))
        for m in members:
            self.ground.check_mask(m)
        object.__setattr__(self, "members", members)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


@dataclass(frozen=True)
class Antichain:
    """A non-empty class of non-empty subsets, pairwise incomparable."""

    ground: GroundSet
    sets: tuple[int, ...]

    def __post_init__(self) -> None:
        sets = tuple(sorted(set(self.sets)))
        if not sets:
            raise ValueError("antichain must be non-empty")
        for m in sets:
            self.ground.check_mask(m)
            if m == 0:
                raise ValueError("antichain members must be non-empty subsets")
        for a in sets:
            for b in sets:
                if a != b and a & b == a:
                    raise ValueError(
                        "antichain members must be pairwise incomparable: "
                        f"{self.ground.subset_key(a)} is contained in "
                        f"{self.ground.subset_key(b)}"
                    )
        object.__setattr__(self, "sets", sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)

    def tag(self) -> str:
        return ",".join(self.ground.tag_key(s) for s in self.sets)


def power_class(ground: GroundSet, min_card: int = 0) -> SetClass:
    """All subsets of the ground set with at least min_card members."""
    if not 0 <= min_card <= ground.n:
        raise ValueError(f"min_card must lie in 0..{ground.n}, got {min_card}")
    return SetClass(ground, tuple(ground.subsets(min_card)))


def superset_closure(antichain: Antichain) -> SetClass:
    """All subsets containing at least one member of the antichain."""
    ground = antichain.ground
    members = [
        s
        for s in range(1, 1 << ground.n)
        if any(t & s == t for t in antichain.sets)
    ]
    return SetClass(ground, tuple(members))


def is_superset_closed(cls: SetClass) -> bool:
    present = set(cls.members)
    full = cls.ground.full_mask
    for m in cls.members:
        rest = full & ~m
        sub = rest
        while True:
            if (m | sub) not in present:
                return False
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return True


def minimal_sets(cls: SetClass) -> Antichain:
    """Inclusion-minimal members of a non-empty, superset-closed class.

    Rejects classes that are empty, contain the empty set, or are not
    closed under supersets.
    """
    if not cls.members:
        raise ValueError("cannot take minimal sets of an empty class")
    if 0 in cls.members:
        raise ValueError("class members must be non-empty subsets")
    if not is_superset_closed(cls):
        raise ValueError("class is not closed under supersets")
    mins = [
        s
        for s in cls.members
        if not any(t != s and t & s == t for t in cls.members)
    ]
    return Antichain(cls.ground, tuple(mins))


def enumerate_antichains(ground: GroundSet, force: bool = False) -> Iterator[Antichain]:
    """Stream every non-empty antichain of non-empty subsets.

    Backtracking over non-empty subsets in ascending mask order; each
    partial choice is extended only with later, incomparable sets, so each
    antichain appears exactly once.  Refuses n >= 6 unless force is set.
    """
    if ground.n >= 6 and not force:
        raise ValueError(
            "antichain enumeration for n >= 6 is a long-running job; "
            "pass force=True to run it anyway"
        )
    masks = p1_masks(ground)

    def extend(chosen: list[int], start: int) -> Iterator[Antichain]:
        for k in range(start, len(masks)):
            cand = masks[k]
            ok = True
            for s in chosen:
                if s & cand == s or s & cand == cand:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(cand)
            yield Antichain(ground, tuple(chosen))
            yield from extend(chosen, k + 1)
            chosen.pop()

    yield from extend([], 0)


def union_closure_class(antichain: Antichain) -> SetClass:
    """Unions of all non-empty subclasses of the antichain."""
    closed = set(antichain.sets)
    changed = True
    while changed:
        changed = False
        for a in list(closed):
            for b in list(closed):
                u = a | b
                if u not in closed:
                    closed.add(u)
                    changed = True
    return SetClass(antichain.ground, tuple(closed))

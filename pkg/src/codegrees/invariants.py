"""Codegrees, kernels, the normal-subgroup lattice, and Fitting data.

Everything here is computed from exact character tables.  Normal
subgroups are represented as unions of conjugacy classes (every normal
subgroup is an intersection of irreducible character kernels), which
makes lattice operations set operations on class indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chartab import (ClassFunction, character_table, classes_of,
                      DEFAULT_SEED)
from .group import (ConjugacyClasses, CosetAction, PermGroup, SubgroupHandle,
                    coset_action, is_nilpotent, is_solvable, p_part,
                    subgroup_from_elements)

__all__ = [
    "NormalSubgroup", "CodegreeSet", "FittingData", "NotSolvableError",
    "kernel", "codegree", "codegree_set", "cod_partition",
    "normal_subgroups", "fitting_subgroup", "solvable_radical",
    "fitting_height", "vanishing_off_subgroup", "p_part",
]


class NotSolvableError(ValueError):
    """Raised when an operation defined for solvable groups gets a
    non-solvable input."""


@dataclass(frozen=True)
class NormalSubgroup:
    """A normal subgroup of a fixed group, stored as a union of classes."""

    classes: ConjugacyClasses
    class_indices: frozenset[int]
    handle: SubgroupHandle = field(compare=False)

    def __post_init__(self):
        if 0 not in self.class_indices:
            raise ValueError("normal subgroup must contain the identity class")
        if self.handle.order != self.order:
            raise ValueError(
                "class union is not closed: generated subgroup has order "
                f"{self.handle.order}, classes sum to {self.order}")

    @property
    def group(self) -> PermGroup:
        return self.classes.group

    @property
    def order(self) -> int:
        return sum(self.classes.sizes[i] for i in self.class_indices)

    @property
    def index(self) -> int:
        return self.group.order // self.order

    def contains(self, other: "NormalSubgroup") -> bool:
        return other.class_indices <= self.class_indices

    def __repr__(self):
        return f"NormalSubgroup(order={self.order} in |G|={self.group.order})"


def _normal_from_indices(cc: ConjugacyClasses,
                         indices: frozenset[int]) -> NormalSubgroup:
    elems = [x for i in sorted(indices) for x in cc.class_elements[i]]
    handle = subgroup_from_elements(cc.group, elems)
    return NormalSubgroup(cc, indices, handle)


def normal_from_handle(cc: ConjugacyClasses, H: PermGroup) -> NormalSubgroup:
    """Wrap an (assumed normal) subgroup as a class union; verified."""
    indices = frozenset(i for i, rep in enumerate(cc.reps) if rep in H)
    return _normal_from_indices(cc, indices)


# ---------------------------------------------------------------------------
# kernels and codegrees


def kernel(chi: ClassFunction) -> NormalSubgroup:
    """ker(chi) = union of classes where chi takes its degree value."""
    d = chi.values[0]
    indices = frozenset(i for i, v in enumerate(chi.values) if v == d)
    return _normal_from_indices(chi.classes, indices)


def codegree(chi: ClassFunction) -> int:
    """cod(chi) = |G : ker(chi)| / chi(1); divisibility is asserted."""
    ker = kernel(chi)
    index = ker.index
    d = chi.degree
    if index % d:
        raise AssertionError(
            f"|G:ker| = {index} not divisible by degree {d}; table is broken")
    return index // d


@dataclass(frozen=True)
class CodegreeSet:
    group: PermGroup
    values: tuple[int, ...]
    per_char: tuple[tuple[int, NormalSubgroup, int], ...]

    def __post_init__(self):
        n = self.group.order
        for v in self.values:
            if n % v:
                raise AssertionError(f"codegree {v} does not divide |G| = {n}")
        if 1 not in self.values:
            raise AssertionError("trivial character codegree missing")
        if n > 1 and len(self.values) < 2:
            raise AssertionError("nonidentity group with |cod(G)| < 2")


_codset_cache: dict[int, tuple[PermGroup, CodegreeSet]] = {}


def codegree_set(G: PermGroup, seed: int = DEFAULT_SEED) -> CodegreeSet:
    hit = _codset_cache.get(id(G))
    if hit is not None and hit[0] is G:
        return hit[1]
    T = character_table(G, seed=seed)
    per_char = []
    for i, chi in enumerate(T.chars):
        ker = kernel(chi)
        index = ker.index
        d = chi.degree
        if index % d:
            raise AssertionError("non-integral codegree; table is broken")
        per_char.append((i, ker, index // d))
    values = tuple(sorted({c for _, _, c in per_char}))
    cs = CodegreeSet(G, values, tuple(per_char))
    _codset_cache[id(G)] = (G, cs)
    return cs


def cod_partition(G: PermGroup, N: NormalSubgroup,
                  seed: int = DEFAULT_SEED) -> tuple[frozenset[int], frozenset[int]]:
    """Split cod(G) into cod(G/N) and cod(G|N) = codegrees of the
    characters whose kernel does not contain N.

    The cod(G/N) half is cross-checked against the quotient group's own
    table (inflation preserves codegrees)."""
    cs = codegree_set(G, seed=seed)
    over, off = set(), set()
    for _i, ker, cod in cs.per_char:
        if N.class_indices <= ker.class_indices:
            over.add(cod)
        else:
            off.add(cod)
    action = coset_action(G, N.handle)
    quotient_cs = codegree_set(action.group, seed=seed)
    if set(quotient_cs.values) != over:
        raise AssertionError(
            "inflation inconsistency: cod(G/N) computed in G is "
            f"{sorted(over)} but in the quotient {quotient_cs.values}")
    return frozenset(over), frozenset(off)


# ---------------------------------------------------------------------------
# the normal-subgroup lattice


_lattice_cache: dict[int, tuple[PermGroup, list[NormalSubgroup]]] = {}


def normal_subgroups(G: PermGroup, seed: int = DEFAULT_SEED) -> list[NormalSubgroup]:
    """Every normal subgroup of G, as intersections of character kernels.

    Sorted by (order, sorted class indices); deterministic."""
    hit = _lattice_cache.get(id(G))
    if hit is not None and hit[0] is G:
        return hit[1]
    T = character_table(G, seed=seed)
    cc = T.classes
    kernels = {kernel(chi).class_indices for chi in T.chars}
    closed = set(kernels)
    frontier = set(kernels)
    while frontier:
        new = set()
        for a in frontier:
            for b in kernels:
                c = a & b
                if c not in closed:
                    new.add(c)
        closed |= new
        frontier = new
    out = [_normal_from_indices(cc, s) for s in closed]
    out.sort(key=lambda n: (n.order, tuple(sorted(n.class_indices))))
    _lattice_cache[id(G)] = (G, out)
    return out


def fitting_subgroup(G: PermGroup, seed: int = DEFAULT_SEED) -> NormalSubgroup:
    """F(G): the unique largest nilpotent normal subgroup; maximality is
    verified against the whole lattice."""
    nilpotents = [n for n in normal_subgroups(G, seed=seed)
                  if is_nilpotent(n.handle)]
    best = max(nilpotents, key=lambda n: n.order)
    for n in nilpotents:
        if not best.contains(n):
            raise AssertionError("Fitting subgroup failed to be unique")
    return best


def solvable_radical(G: PermGroup, seed: int = DEFAULT_SEED) -> NormalSubgroup:
    """Sol(G): the unique largest solvable normal subgroup; verified."""
    solvables = [n for n in normal_subgroups(G, seed=seed)
                 if is_solvable(n.handle)]
    best = max(solvables, key=lambda n: n.order)
    for n in solvables:
        if not best.contains(n):
            raise AssertionError("solvable radical failed to be unique")
    return best


# ---------------------------------------------------------------------------
# Fitting series and height


@dataclass(frozen=True)
class FittingData:
    """The Fitting series 1 < F(G) < F2(G) < ... = G and its length."""

    group: PermGroup
    series: tuple[NormalSubgroup, ...]
    height: int

    def __post_init__(self):
        if self.height != len(self.series):
            raise AssertionError("Fitting height != series length")

    def term_order(self, i: int) -> int:
        """|F_i(G)| with F_0 = 1."""
        return 1 if i == 0 else self.series[i - 1].order


_fitting_cache: dict[int, tuple[PermGroup, FittingData]] = {}


def fitting_height(G: PermGroup, seed: int = DEFAULT_SEED) -> FittingData:
    """Fitting series/height by iterated quotients; solvable groups only."""
    hit = _fitting_cache.get(id(G))
    if hit is not None and hit[0] is G:
        return hit[1]
    if not is_solvable(G):
        raise NotSolvableError(
            "Fitting height is only computed for solvable groups")
    cc = classes_of(G)
    series = []
    quotient = G

    def hom(g):  # composed quotient map G -> current quotient
        for action in actions:
            g = action.apply(g)
        return g

    actions: list[CosetAction] = []
    while quotient.order > 1:
        F = fitting_subgroup(quotient, seed=seed)
        if F.order == 1:
            raise AssertionError("trivial Fitting subgroup in solvable group")
        # preimage of F in G, as a class union
        indices = frozenset(
            i for i, rep in enumerate(cc.reps) if hom(rep) in F.handle)
        term = _normal_from_indices(cc, indices)
        if term.order != F.order * (G.order // quotient.order):
            raise AssertionError("Fitting series preimage has wrong order")
        series.append(term)
        action = coset_action(quotient, F.handle)
        actions.append(action)
        quotient = action.group
    data = FittingData(G, tuple(series), len(series))
    _fitting_cache[id(G)] = (G, data)
    return data


# ---------------------------------------------------------------------------
# vanishing-off subgroups


def vanishing_off_subgroup(theta: ClassFunction) -> NormalSubgroup:
    """V(theta) = <h : theta(h) != 0>; a normal subgroup (verified)."""
    cc = theta.classes
    nonzero = [i for i, v in enumerate(theta.values) if not v.is_zero]
    elems = [x for i in nonzero for x in cc.class_elements[i]]
    handle = subgroup_from_elements(cc.group, elems)
    indices = frozenset(i for i, rep in enumerate(cc.reps) if rep in handle)
    return NormalSubgroup(cc, indices, handle)

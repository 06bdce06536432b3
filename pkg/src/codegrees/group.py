"""Permutation groups via stabilizer chains (deterministic Schreier-Sims).

Provides exact order and membership, element enumeration, conjugacy
classes with power maps, subgroups, normal closures, derived series,
Sylow subgroups, and actions on cosets (quotient realization).

Scale assumptions: desk-size groups.  Conjugacy classes and Sylow
subgroups enumerate all elements and are guarded by an order cap
(default 10^5).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Callable, Iterable, Sequence

from .perm import Permutation

DEFAULT_ORDER_CAP = 10**5
DEFAULT_DEGREE_CAP = 10**4


class CapExceededError(RuntimeError):
    """A configured order or degree cap was exceeded."""


class NotAMemberError(ValueError):
    """A permutation expected inside a group is not a member."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def p_part(n: int, p: int) -> int:
    """Largest power of the prime p dividing n."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


class _Level:
    __slots__ = ("point", "transversal")

    def __init__(self, point: int, identity: Permutation):
        self.point = point
        # transversal[q] maps self.point to q
        self.transversal: dict[int, Permutation] = {point: identity}


class StabilizerChain:
    """Base, transversals and strong generators for a permutation group.

    Strong generators are stored with the index of the deepest level
    whose base prefix they fix; each Schreier generator is sifted exactly
    once, which keeps the construction deterministic and quadratic-ish at
    the scales this library targets.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation]):
        self.degree = degree
        self.identity = Permutation.identity(degree)
        self.levels: list[_Level] = []
        # (permutation, level at which it was inserted)
        self.strong_gens: list[tuple[Permutation, int]] = []
        self._processed: set[tuple[int, int, int]] = set()  # (level, point, gen id)
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            self._insert(g, 0)
        self._close()

    # -- construction ---------------------------------------------------

    def _sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Reduce g through the chain; return (residue, failing level)."""
        for i in range(start, len(self.levels)):
            level = self.levels[i]
            q = g(level.point)
            if q == level.point:
                continue
            u = level.transversal.get(q)
            if u is None:
                return g, i
            g = u.inverse() * g
        return g, len(self.levels)

    def _insert(self, g: Permutation, start: int) -> bool:
        residue, lvl = self._sift(g, start)
        if residue.is_identity:
            return False
        if lvl == len(self.levels):
            base_point = min(i for i in range(self.degree)
                             if residue(i) != i)
            self.levels.append(_Level(base_point, self.identity))
        self.strong_gens.append((residue, lvl))
        return True

    def _close(self) -> None:
        """Grow orbits and sift Schreier generators until stable.

        Levels are processed deepest-first so that whenever a level's
        Schreier generators are sifted, everything below it is already
        closed; a level stops at its first successful insertion and the
        scan restarts from the (possibly new) deepest level.
        """
        while True:
            for i in reversed(range(len(self.levels))):
                if self._close_level(i):
                    break
            else:
                break

    def _close_level(self, i: int) -> bool:
        level = self.levels[i]
        gens = [(gid, g) for gid, (g, l) in enumerate(self.strong_gens)
                if l >= i]
        # orbit closure (new generators may enlarge it)
        queue = sorted(level.transversal)
        while queue:
            pt = queue.pop(0)
            u = level.transversal[pt]
            for _, g in gens:
                q = g(pt)
                if q not in level.transversal:
                    level.transversal[q] = g * u
                    queue.append(q)
        # Schreier generators, each handled exactly once
        for pt in sorted(level.transversal):
            u = level.transversal[pt]
            for gid, g in gens:
                key = (i, pt, gid)
                if key in self._processed:
                    continue
                self._processed.add(key)
                schreier = level.transversal[g(pt)].inverse() * (g * u)
                if self._insert(schreier, i + 1):
                    return True
        return False

    # -- queries ---------------------------------------------------------

    def order(self) -> int:
        n = 1
        for level in self.levels:
            n *= len(level.transversal)
        return n

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = self._sift(g)
        return residue.is_identity

    def elements(self) -> list[Permutation]:
        """All group elements, in a deterministic order."""
        out = [self.identity]
        for level in reversed(self.levels):
            reps = [level.transversal[q] for q in sorted(level.transversal)]
            out = [u * e for u in reps for e in out]
        return out


class PermGroup:
    """A permutation group on {0, ..., degree-1} given by generators."""

    def __init__(self, degree: int, generators: Iterable[Permutation]):
        gens = tuple(g for g in generators if not g.is_identity)
        for g in gens:
            if g.degree != degree:
                raise ValueError(
                    f"generator degree {g.degree} != group degree {degree}")
        self.degree = degree
        self.generators = gens
        self.chain = StabilizerChain(degree, gens)
        self.order = self.chain.order()
        self._elements: list[Permutation] | None = None

    def __contains__(self, g: Permutation) -> bool:
        return self.chain.contains(g)

    @property
    def identity(self) -> Permutation:
        return self.chain.identity

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def elements(self) -> list[Permutation]:
        if self._elements is None:
            self._elements = self.chain.elements()
        return self._elements

    def __repr__(self) -> str:
        return (f"{type(self).__name__}(degree={self.degree}, "
                f"order={self.order})")


class SubgroupHandle(PermGroup):
    """A subgroup of a parent group, with its own chain and order."""

    def __init__(self, parent: PermGroup, generators: Iterable[Permutation]):
        gens = tuple(generators)
        for g in gens:
            if g not in parent:
                raise NotAMemberError(f"{g!r} is not in the parent group")
        super().__init__(parent.degree, gens)
        self.parent = parent
        assert parent.order % self.order == 0, "Lagrange violated"


def subgroup(G: PermGroup, gens: Sequence[Permutation]) -> SubgroupHandle:
    return SubgroupHandle(G, gens)


def normal_closure(G: PermGroup, gens: Sequence[Permutation]) -> SubgroupHandle:
    """Smallest normal subgroup of G containing gens."""
    closure = [g for g in gens if not g.is_identity]
    for g in closure:
        if g not in G:
            raise NotAMemberError(f"{g!r} is not in the group")
    H = SubgroupHandle(G, closure)
    stable = False
    while not stable:
        stable = True
        for h in list(closure):
            for g in G.generators:
                c = h.conjugate(g)
                if c not in H:
                    closure.append(c)
                    H = SubgroupHandle(G, closure)
                    stable = False
    return H


def derived_subgroup(G: PermGroup) -> SubgroupHandle:
    """Commutator subgroup, as the normal closure of generator commutators."""
    comms = []
    for a in G.generators:
        for b in G.generators:
            c = a.inverse() * b.inverse() * a * b
            if not c.is_identity:
                comms.append(c)
    # closure must be normal in G itself, not only in the subgroup
    return normal_closure(G, comms)


def derived_series(G: PermGroup) -> list[SubgroupHandle]:
    """G >= G' >= G'' >= ... down to stabilization."""
    parent = G.parent if isinstance(G, SubgroupHandle) else G
    series: list[SubgroupHandle] = [SubgroupHandle(parent, G.generators)]
    while True:
        nxt = _derived_in(parent, series[-1])
        if nxt.order == series[-1].order:
            break
        series.append(nxt)
        if nxt.order == 1:
            break
    return series


def _derived_in(parent: PermGroup, H: PermGroup) -> SubgroupHandle:
    # keep the generating set minimal: only keep elements that actually
    # enlarge the subgroup, otherwise generator lists square each step
    gens: list[Permutation] = []
    K = SubgroupHandle(parent, gens)

    def add(c: Permutation) -> bool:
        nonlocal K
        if c.is_identity or c in K:
            return False
        gens.append(c)
        K = SubgroupHandle(parent, gens)
        return True

    for a in H.generators:
        for b in H.generators:
            add(a.inverse() * b.inverse() * a * b)
    stable = False
    while not stable:
        stable = True
        for h in list(gens):
            for g in H.generators:
                if add(h.conjugate(g)):
                    stable = False
    return K


def subgroup_from_elements(G: PermGroup,
                           elements: Sequence[Permutation]) -> SubgroupHandle:
    """Subgroup generated by elements, with a reduced generating set."""
    gens: list[Permutation] = []
    K = SubgroupHandle(G, gens)
    for x in elements:
        if not x.is_identity and x not in K:
            gens.append(x)
            K = SubgroupHandle(G, gens)
    return K


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G)[-1].order == 1


def derived_length(G: PermGroup) -> int:
    series = derived_series(G)
    if series[-1].order != 1:
        raise ValueError("derived length is only defined for solvable groups")
    return len(series) - 1


def element_order(g: Permutation) -> int:
    return g.order()


def exponent(G: PermGroup, cap: int = DEFAULT_ORDER_CAP) -> int:
    if G.order > cap:
        raise CapExceededError(f"|G| = {G.order} exceeds cap {cap}")
    e = 1
    for g in G.elements():
        e = lcm(e, g.order())
    return e


def centralizer_order(G: PermGroup, g: Permutation,
                      cap: int = DEFAULT_ORDER_CAP) -> int:
    if G.order > cap:
        raise CapExceededError(f"|G| = {G.order} exceeds cap {cap}")
    return sum(1 for x in G.elements() if x * g == g * x)


@dataclass(frozen=True)
class ConjugacyClasses:
    """Conjugacy classes of a group, with power maps.

    Class 0 is the class of the identity.  Classes are ordered by
    (order of representative, class size, representative images), which
    makes everything downstream deterministic.
    """

    group: PermGroup
    reps: tuple[Permutation, ...]
    sizes: tuple[int, ...]
    class_elements: tuple[tuple[Permutation, ...], ...]
    exponent: int
    power_maps: tuple[tuple[int, ...], ...]  # power_maps[m][k] = class of rep_k^m
    inverse_map: tuple[int, ...]
    _index: dict[Permutation, int] = field(repr=False, hash=False, compare=False,
                                           default_factory=dict)

    def __len__(self) -> int:
        return len(self.reps)

    def class_of(self, g: Permutation) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise NotAMemberError(f"{g!r} is not in the group") from None


def conjugacy_classes(G: PermGroup,
                      cap: int = DEFAULT_ORDER_CAP) -> ConjugacyClasses:
    if G.order > cap:
        raise CapExceededError(f"|G| = {G.order} exceeds cap {cap}")
    elems = sorted(G.elements(), key=lambda g: (g.order(), g.images))
    remaining = set(elems)
    gens = G.generators
    raw_classes: list[list[Permutation]] = []
    for g in elems:
        if g not in remaining:
            continue
        # orbit of g under conjugation by generators
        cls = [g]
        remaining.discard(g)
        queue = [g]
        while queue:
            x = queue.pop()
            for s in gens:
                y = x.conjugate(s)
                if y in remaining:
                    remaining.discard(y)
                    cls.append(y)
                    queue.append(y)
        raw_classes.append(sorted(cls, key=lambda p: p.images))
    raw_classes.sort(key=lambda cls: (cls[0].order(), len(cls), cls[0].images))
    reps = tuple(cls[0] for cls in raw_classes)
    sizes = tuple(len(cls) for cls in raw_classes)
    index: dict[Permutation, int] = {}
    for k, cls in enumerate(raw_classes):
        for x in cls:
            index[x] = k
    e = 1
    for r in reps:
        e = lcm(e, r.order())
    power_maps = []
    current = [G.identity for _ in reps]
    for m in range(e):
        power_maps.append(tuple(index[x] for x in current))
        current = [x * r for x, r in zip(current, reps)]
    inverse_map = tuple(index[r.inverse()] for r in reps)
    return ConjugacyClasses(
        group=G, reps=reps, sizes=sizes,
        class_elements=tuple(tuple(cls) for cls in raw_classes),
        exponent=e, power_maps=tuple(power_maps), inverse_map=inverse_map,
        _index=index)


def sylow(G: PermGroup, p: int, cap: int = DEFAULT_ORDER_CAP) -> SubgroupHandle:
    """A Sylow p-subgroup, found by extending through normalizers.

    Starts from a cyclic subgroup generated by a p-element of maximal
    order, then repeatedly adjoins a p-element of the normalizer until
    the full p-part of |G| is reached.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    target = p_part(G.order, p)
    if target == 1:
        return SubgroupHandle(G, ())
    if G.order > cap:
        raise CapExceededError(f"|G| = {G.order} exceeds cap {cap}")
    elems = G.elements()
    p_elements = []
    for g in elems:
        o = g.order()
        pe = g ** (o // p_part(o, p))
        if not pe.is_identity:
            p_elements.append(pe)
    p_elements = sorted(set(p_elements),
                        key=lambda g: (-g.order(), g.images))
    P = SubgroupHandle(G, (p_elements[0],))
    while P.order < target:
        x = _sylow_extension(G, P, elems, p)
        P = SubgroupHandle(G, P.generators + (x,))
    return P


def _sylow_extension(G: PermGroup, P: SubgroupHandle,
                     elems: list[Permutation], p: int) -> Permutation:
    """A p-element of N_G(P) outside P (exists while |P| < |G|_p)."""
    candidates = []
    for g in elems:
        o = g.order()
        po = p_part(o, p)
        if po == 1:
            continue
        x = g ** (o // po)
        if x in P:
            continue
        if all(h.conjugate(x) in P for h in P.generators) and \
                all(h.conjugate(x.inverse()) in P for h in P.generators):
            candidates.append(x)
    if not candidates:
        raise AssertionError("Sylow extension step found no candidate")
    return min(candidates, key=lambda g: g.images)


def is_nilpotent(G: PermGroup, cap: int = DEFAULT_ORDER_CAP) -> bool:
    """True iff every Sylow subgroup is normal."""
    n = G.order
    for p in _prime_divisors(n):
        P = sylow(G, p, cap=cap)
        for g in G.generators:
            for h in P.generators:
                if h.conjugate(g) not in P:
                    return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass
class CosetAction:
    """Action of G on the left cosets of a subgroup N.

    The homomorphism sends x to the permutation (gN -> xgN) of coset
    indices; index 0 is the coset N itself.  For normal N the image is a
    faithful copy of G/N.
    """

    source: PermGroup
    subgroup: PermGroup
    reps: tuple[Permutation, ...]
    group: PermGroup
    _canon: Callable[[Permutation], tuple[int, ...]]
    _coset_index: dict[tuple[int, ...], int]

    def apply(self, x: Permutation) -> Permutation:
        if x not in self.source:
            raise NotAMemberError(f"{x!r} not in the source group")
        images = [self._coset_index[self._canon(x * r)] for r in self.reps]
        return Permutation(images)


def coset_action(G: PermGroup, N: PermGroup,
                 degree_cap: int = DEFAULT_DEGREE_CAP) -> CosetAction:
    if G.order % N.order != 0:
        raise ValueError("subgroup order does not divide group order")
    index = G.order // N.order
    if index > degree_cap:
        raise CapExceededError(
            f"coset index {index} exceeds degree cap {degree_cap}")
    n_elems = N.elements()

    def canon(g: Permutation) -> tuple[int, ...]:
        return min((g * n).images for n in n_elems)

    reps: list[Permutation] = [G.identity]
    coset_index: dict[tuple[int, ...], int] = {canon(G.identity): 0}
    queue = [G.identity]
    while queue:
        r = queue.pop(0)
        for g in G.generators:
            x = g * r
            key = canon(x)
            if key not in coset_index:
                coset_index[key] = len(reps)
                reps.append(x)
                queue.append(x)
    assert len(reps) == index, "coset enumeration incomplete"
    image_gens = []
    for g in G.generators:
        images = [coset_index[canon(g * r)] for r in reps]
        image_gens.append(Permutation(images))
    image = PermGroup(index, image_gens)
    return CosetAction(source=G, subgroup=N, reps=tuple(reps), group=image,
                       _canon=canon, _coset_index=coset_index)

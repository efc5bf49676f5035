"""Finite G-sets: orbit typing, fixed points with their Weyl action,
induction and restriction, the Mackey decomposition, automorphism groups,
and splitting over a family of subgroups.

A GSet stores the full action table, one point permutation per group
element.  The multiset of (stabilizer class, multiplicity) pairs is a
complete isomorphism invariant, so G-sets are compared through it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .group_core import (
    Group,
    SubgroupClass,
    class_of_subgroup,
    identity_perm,
    pinv,
    pmul,
    reduce_generators,
    subgroup_conjugacy_classes,
    weyl_group_with_section,
    is_subconjugate,
    normalizer,
    closure,
)


class GSet:
    """A finite left action of a Group on points 0..size-1."""

    __slots__ = ("group", "size", "_maps")

    def __init__(self, group: Group, size: int, maps: dict):
        self.group = group
        self.size = size
        self._maps = dict(maps)

    def act(self, g, point: int) -> int:
        return self._maps[g][point]

    def perm(self, g):
        return self._maps[g]

    def validate(self):
        """Check the table is a genuine action; used on untrusted input."""
        if set(self._maps) != set(self.group.elements):
            raise ValueError("action table must cover every group element")
        ident = identity_perm(self.size)
        for g, p in self._maps.items():
            if len(p) != self.size or sorted(p) != list(range(self.size)):
                raise ValueError(f"image of {g} is not a permutation")
        if self._maps[self.group.identity] != ident:
            raise ValueError("identity must act trivially")
        for g in self.group.elements:
            for h in self.group.elements:
                if pmul(self._maps[g], self._maps[h]) != self._maps[pmul(g, h)]:
                    raise ValueError("action table is not multiplicative")
        return self

    def orbits(self):
        """Orbits as sorted point tuples, ordered by minimal point."""
        seen = set()
        out = []
        for p in range(self.size):
            if p in seen:
                continue
            orbit = {p}
            frontier = [p]
            while frontier:
                q = frontier.pop()
                for g in self.group.generators:
                    r = self._maps[g][q]
                    if r not in orbit:
                        orbit.add(r)
                        frontier.append(r)
            seen |= orbit
            out.append(tuple(sorted(orbit)))
        return out

    def stabilizer(self, point: int) -> Group:
        els = frozenset(
            g for g in self.group.elements if self._maps[g][point] == point
        )
        return self.group.subgroup(els)

    def __repr__(self):
        return f"GSet(group_order={self.group.order}, size={self.size})"


def empty_gset(g: Group) -> GSet:
    return GSet(g, 0, {x: () for x in g.elements})


def trivial_gset(g: Group, n: int) -> GSet:
    ident = identity_perm(n)
    return GSet(g, n, {x: ident for x in g.elements})


def gset_from_action(g: Group, size: int, maps: dict) -> GSet:
    """Build a GSet from an explicit table, validating it."""
    return GSet(g, size, {tuple(k): tuple(v) for k, v in maps.items()}).validate()


def coset_gset(g: Group, h: Group) -> GSet:
    """The left coset action of g on g/h."""
    if not h.is_subgroup_of(g):
        raise ValueError("coset_gset needs a subgroup of g")
    reps = []
    coset_of: dict = {}
    for x in g.sorted_elements():
        if x in coset_of:
            continue
        idx = len(reps)
        reps.append(x)
        for k in h.elements:
            coset_of[pmul(x, k)] = idx
    size = len(reps)
    maps = {}
    for u in g.elements:
        maps[u] = tuple(coset_of[pmul(u, reps[i])] for i in range(size))
    return GSet(g, size, maps)


def disjoint_union(*parts: GSet) -> GSet:
    assert parts, "disjoint_union needs at least one part"
    g = parts[0].group
    assert all(p.group == g for p in parts)
    size = sum(p.size for p in parts)
    maps = {}
    for x in g.elements:
        img = []
        offset = 0
        for p in parts:
            img.extend(q + offset for q in p.perm(x))
            offset += p.size
        maps[x] = tuple(img)
    return GSet(g, size, maps)


@dataclass(frozen=True)
class GSetType:
    """Multiset of (stabilizer class, multiplicity): the isomorphism type."""

    group: Group
    entries: tuple  # ((SubgroupClass, int), ...) sorted by (order, key)

    @classmethod
    def from_counts(cls, group: Group, counts: dict) -> "GSetType":
        entries = tuple(
            (c, counts[c])
            for c in sorted(counts, key=lambda c: (c.order, c.canonical_key))
            if counts[c] > 0
        )
        return cls(group, entries)

    @property
    def size(self) -> int:
        g = self.group.order
        return sum(n * (g // c.order) for c, n in self.entries)

    def multiplicity(self, cls: SubgroupClass) -> int:
        for c, n in self.entries:
            if c == cls:
                return n
        return 0

    def label(self) -> str:
        if not self.entries:
            return "empty"
        chunks = []
        for c, n in self.entries:
            chunks.append(f"G/{c.name}" if n == 1 else f"{n}*G/{c.name}")
        return " + ".join(chunks)

    def drop(self, cls: SubgroupClass) -> "GSetType":
        """The type with every orbit of the given class deleted."""
        return GSetType(
            self.group, tuple((c, n) for c, n in self.entries if c != cls)
        )

    def to_json(self):
        return [
            {
                "subgroup_order": c.order,
                "class_key": c.name,
                "multiplicity": n,
            }
            for c, n in self.entries
        ]

    def __repr__(self):
        return f"GSetType({self.label()})"


def orbit_type(x: GSet) -> GSetType:
    """The complete isomorphism invariant of a G-set."""
    counts: Counter = Counter()
    for orbit in x.orbits():
        stab = frozenset(
            g for g in x.group.elements if x.perm(g)[orbit[0]] == orbit[0]
        )
        cls = class_of_subgroup(x.group, stab)
        assert len(orbit) * cls.order == x.group.order
        counts[cls] += 1
    t = GSetType.from_counts(x.group, counts)
    assert t.size == x.size
    return t


def realize_type(t: GSetType) -> GSet:
    """A concrete G-set with the given orbit type."""
    parts = [empty_gset(t.group)]
    for cls, n in t.entries:
        block = coset_gset(t.group, cls.representative)
        parts.extend([block] * n)
    return disjoint_union(*parts)


def delete_orbits(x: GSet, cls: SubgroupClass) -> GSet:
    """x with every orbit of isotropy class cls removed, points renumbered."""
    keep = []
    for orbit in x.orbits():
        stab = frozenset(
            g for g in x.group.elements if x.perm(g)[orbit[0]] == orbit[0]
        )
        if class_of_subgroup(x.group, stab) != cls:
            keep.extend(orbit)
    keep.sort()
    index = {p: i for i, p in enumerate(keep)}
    maps = {
        g: tuple(index[x.perm(g)[p]] for p in keep) for g in x.group.elements
    }
    return GSet(x.group, len(keep), maps)


def fixed_points(x: GSet, k: SubgroupClass) -> GSet:
    """The K-fixed points of x as a Weyl-group set.

    The Weyl group N(K)/K acts through the coset-representative section.
    When every orbit class of x is either the class of K itself or does not
    contain K subconjugately, the result is a free Weyl set; that freeness
    is asserted.
    """
    g = x.group
    assert k.parent == g
    w, section = weyl_group_with_section(g, k)
    krep = k.representative
    fixed = [
        p
        for p in range(x.size)
        if all(x.perm(t)[p] == p for t in krep.generators)
    ]
    index = {p: i for i, p in enumerate(fixed)}
    maps = {}
    for wp, rep in section.items():
        maps[wp] = tuple(index[x.perm(rep)[p]] for p in fixed)
    out = GSet(w, len(fixed), maps)
    t = orbit_type(x)
    only_k_or_incomparable = all(
        c == k or not is_subconjugate(g, k, c) for c, _ in t.entries
    )
    if only_k_or_incomparable:
        free = all(
            out.stabilizer(p).order == 1 for p in range(out.size)
        )
        assert free, "fixed points failed to be a free Weyl set"
    return out


def restrict(x: GSet, h: Group) -> GSet:
    """The same points viewed as an H-set for a subgroup H."""
    if not h.is_subgroup_of(x.group):
        raise ValueError("restrict needs a subgroup of the acting group")
    return GSet(h, x.size, {t: x.perm(t) for t in h.elements})


def induce(g: Group, k: Group, y: GSet) -> GSet:
    """The induced G-set G x_K Y on pairs (coset representative, point)."""
    if not k.is_subgroup_of(g):
        raise ValueError("induce needs a subgroup of g")
    if y.group != k:
        raise ValueError("induce needs a K-set over the same subgroup")
    reps = []
    coset_of: dict = {}
    for x in g.sorted_elements():
        if x in coset_of:
            continue
        idx = len(reps)
        reps.append(x)
        for t in k.elements:
            coset_of[pmul(x, t)] = idx
    m = len(reps)
    size = m * y.size
    maps = {}
    for u in g.elements:
        img = [0] * size
        for i in range(m):
            moved = pmul(u, reps[i])
            j = coset_of[moved]
            t = pmul(pinv(reps[j]), moved)
            yp = y.perm(t)
            base = i * y.size
            jbase = j * y.size
            for q in range(y.size):
                img[base + q] = jbase + yp[q]
        maps[u] = tuple(img)
    return GSet(g, size, maps)


def mackey_decompose(g: Group, h: Group, k: Group, y: GSet) -> GSet:
    """Restriction of an induced G-set, one summand per H-g-K double coset.

    Each double coset representative r contributes the H-set induced from
    H meet rKr^-1 acting on y through conjugation by r.
    """
    from .group_core import double_cosets

    if y.group != k:
        raise ValueError("mackey_decompose needs a K-set")
    dec = double_cosets(g, h, k)
    parts = []
    for r in dec.representatives:
        ir = pinv(r)
        conj_k = frozenset(pmul(pmul(r, t), ir) for t in k.elements)
        cap = g.subgroup(h.elements & conj_k)
        twisted = GSet(
            cap,
            y.size,
            {l: y.perm(pmul(pmul(ir, l), r)) for l in cap.elements},
        )
        parts.append(induce(h, cap, twisted))
    return disjoint_union(*parts) if parts else empty_gset(h)


def aut_group(x: GSet) -> Group:
    """The group of equivariant self-bijections, as permutations of points.

    Generated by Weyl translations on one orbit per class together with
    swaps of isomorphic orbits; the order is the product over classes of
    |W|^n * n! for n orbits of that class.
    """
    g = x.group
    if x.size == 0:
        return Group(0, ())
    by_class: dict = {}
    for orbit in x.orbits():
        stab = frozenset(t for t in g.elements if x.perm(t)[orbit[0]] == orbit[0])
        cls = class_of_subgroup(g, stab)
        by_class.setdefault(cls, []).append(orbit)
    gens = []
    for cls, orbits in sorted(
        by_class.items(), key=lambda kv: (kv[0].order, kv[0].canonical_key)
    ):
        base0 = orbits[0][0]
        s0 = frozenset(t for t in g.elements if x.perm(t)[base0] == base0)
        # One base point per orbit, all with the same literal stabilizer.
        bases = [base0]
        for orbit in orbits[1:]:
            aligned = next(
                p
                for p in orbit
                if frozenset(t for t in g.elements if x.perm(t)[p] == p) == s0
            )
            bases.append(aligned)
        words = {}
        for orbit, base in zip(orbits, bases):
            w = {base: g.identity}
            frontier = [base]
            while frontier:
                p = frontier.pop()
                for t in g.generators:
                    q = x.perm(t)[p]
                    if q not in w:
                        w[q] = pmul(t, w[p])
                        frontier.append(q)
            words[base] = w
        n_group = normalizer(g, g.subgroup(s0))
        for t in n_group.generators:
            perm = list(range(x.size))
            for p, word in words[bases[0]].items():
                perm[p] = x.perm(pmul(word, t))[bases[0]]
            gens.append(tuple(perm))
        for i in range(len(bases) - 1):
            perm = list(range(x.size))
            for p, word in words[bases[i]].items():
                perm[p] = x.perm(word)[bases[i + 1]]
            for p, word in words[bases[i + 1]].items():
                perm[p] = x.perm(word)[bases[i]]
            gens.append(tuple(perm))
    els = closure(gens, x.size)
    return Group(x.size, reduce_generators(els, x.size), els)


@dataclass(frozen=True)
class FSplitting:
    """Free Weyl-set ranks of a G-set over the classes outside a family."""

    group: Group
    family: "object"
    ranks: tuple  # ((SubgroupClass, int), ...) over all classes outside F

    def rank(self, cls: SubgroupClass) -> int:
        for c, n in self.ranks:
            if c == cls:
                return n
        raise KeyError(cls)


def f_split(x: GSet, family) -> FSplitting:
    """Split a G-set with isotropy outside the family into Weyl ranks.

    The rank at a class H is the number of orbits of that class, equal to
    the count of injective equivariant maps G/H -> X divided by |W(H)|.
    """
    g = x.group
    t = orbit_type(x)
    offending = [c.name for c, _ in t.entries if c in family.classes]
    if offending:
        raise ValueError(
            f"G-set has isotropy inside the family: {', '.join(offending)}"
        )
    outside = [
        c for c in subgroup_conjugacy_classes(g) if c not in family.classes
    ]
    ranks = tuple((c, t.multiplicity(c)) for c in outside)
    return FSplitting(g, family, ranks)


def f_assemble(split: FSplitting) -> GSetType:
    """Rebuild the orbit type from its family splitting."""
    counts = {c: n for c, n in split.ranks if n > 0}
    return GSetType.from_counts(split.group, counts)

"""The Burnside ring through its table of marks: fixed-point counts of
coset spaces, idempotent block counts, and the decomposability predicates
used by the stage checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .group_core import (
    Group,
    SubgroupClass,
    group_flags,
    perfect_subgroup_classes,
    prime_factors,
    subgroup_conjugacy_classes,
    weyl_group,
)
from .gset import coset_gset, fixed_points


@dataclass(frozen=True)
class TableOfMarks:
    """Fixed-point counts m[H][K] = |(G/H)^K| over ordered classes.

    Classes are sorted ascending by (order, canonical key), which makes the
    matrix lower triangular with Weyl group orders on the diagonal.
    """

    group: Group
    classes: tuple
    marks: "np.ndarray"

    def index(self, cls: SubgroupClass) -> int:
        return self.classes.index(cls)

    def row(self, cls: SubgroupClass):
        return self.marks[self.index(cls)]

    def to_text(self) -> str:
        names = [c.name for c in self.classes]
        width = max(len(n) for n in names)
        cell = max(width, max(len(str(int(v))) for v in self.marks.flat))
        head = " " * (width + 1) + " ".join(n.rjust(cell) for n in names)
        lines = [head]
        for name, row in zip(names, self.marks):
            lines.append(
                name.rjust(width)
                + " "
                + " ".join(str(int(v)).rjust(cell) for v in row)
            )
        return "\n".join(lines)

    def to_json(self):
        return {
            "classes": [c.name for c in self.classes],
            "marks": self.marks.tolist(),
        }


@lru_cache(maxsize=None)
def table_of_marks(g: Group) -> TableOfMarks:
    classes = subgroup_conjugacy_classes(g)
    n = len(classes)
    marks = np.zeros((n, n), dtype=np.int64)
    for i, h in enumerate(classes):
        x = coset_gset(g, h.representative)
        for j, k in enumerate(classes):
            marks[i, j] = fixed_points(x, k).size
    return TableOfMarks(g, classes, marks)


@dataclass(frozen=True)
class BurnsideElement:
    """An integer combination of coset classes [G/H] in the class basis."""

    table: TableOfMarks
    coefficients: tuple

    def __post_init__(self):
        assert len(self.coefficients) == len(self.table.classes)

    def marks_vector(self):
        """Ghost coordinates: the fixed-point count at every class."""
        c = np.array(self.coefficients, dtype=np.int64)
        return self.table.marks.T @ c

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        assert self.table is other.table
        return BurnsideElement(
            self.table,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )


def idempotent_block_count(g: Group) -> int:
    """Number of primitive idempotents of the Burnside ring.

    Equals the number of conjugacy classes of perfect subgroups, so it is
    1 exactly for solvable groups.
    """
    return len(perfect_subgroup_classes(g))


def is_indecomposable_mod(n: int) -> bool:
    """Whether Z/n is an indecomposable ring (n = 0 meaning Z itself)."""
    if n == 0:
        return True
    if n == 1:
        return False
    return len(prime_factors(n)) == 1


def sphere_ic(w: Group) -> bool:
    """The sphere-coefficient indecomposability criterion for a Weyl group.

    Holds exactly when the group is a nontrivial p-group: both following
    quotients of the Burnside ring, the integers and Z/|W|, must be
    indecomposable, which pins |W| to a prime power > 1.
    """
    flags = group_flags(w)
    return flags.is_p_group and not flags.is_trivial


def degree_is_constant(g: Group, h: SubgroupClass) -> bool:
    """Whether the mark vector of G/H is a nonzero constant.

    True only for H = G: a proper subgroup has a positive mark at the
    trivial class and mark zero at the full class.
    """
    row = table_of_marks(g).row(h)
    first = int(row[0])
    return first != 0 and all(int(v) == first for v in row)

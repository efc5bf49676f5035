"""Coefficient ring descriptors and the per-stage standardness checks.

A descriptor records just enough arithmetic about the coefficients to
decide, for each subgroup stage, whether the induction step applies: an
indecomposability check tied to the Weyl group order and a retraction
check tied to torsion and invertible primes.  Descriptors with a
nontrivial action are declared but rejected by every check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .burnside import is_indecomposable_mod, sphere_ic
from .group_core import Group, SubgroupClass, prime_factors, weyl_group


class UnsupportedDescriptorError(ValueError):
    """Raised when a ring descriptor is outside the implemented fragment."""


@dataclass(frozen=True)
class RingDescriptor:
    """What the checks need to know about a coefficient ring.

    The callables take integers: indecomposable_mod(n) asks whether the
    mod-n reduction stays indecomposable, torsion_free(n) whether there is
    no n-torsion, prime_invertible(q) whether the prime q is a unit.
    """

    name: str
    kind: str  # sphere | integers | prime_field | custom
    char: int
    indecomposable: bool
    indecomposable_mod: Callable[[int], bool] = field(compare=False)
    torsion_free: Callable[[int], bool] = field(compare=False)
    prime_invertible: Callable[[int], bool] = field(compare=False)
    separably_closed: bool
    burnside_unit: bool
    rc_witness_map_to: Optional["RingDescriptor"] = None
    inflated: bool = True
    action: str = "trivial"


def sphere() -> RingDescriptor:
    """The initial ring.  Retraction questions are settled on its integral
    shadow, so they delegate to the integers."""
    return RingDescriptor(
        name="sphere",
        kind="sphere",
        char=0,
        indecomposable=True,
        indecomposable_mod=lambda n: True,
        torsion_free=lambda n: True,
        prime_invertible=lambda q: False,
        separably_closed=True,
        burnside_unit=True,
        rc_witness_map_to=integers(),
    )


def integers() -> RingDescriptor:
    return RingDescriptor(
        name="Z",
        kind="integers",
        char=0,
        indecomposable=True,
        indecomposable_mod=is_indecomposable_mod,
        torsion_free=lambda n: True,
        prime_invertible=lambda q: False,
        separably_closed=True,
        burnside_unit=False,
    )


def prime_field(p: int) -> RingDescriptor:
    if p < 2 or any(p % q == 0 for q in range(2, p)):
        raise ValueError(f"{p} is not prime")
    return RingDescriptor(
        name=f"F{p}",
        kind="prime_field",
        char=p,
        indecomposable=True,
        # mod-n reduction of F_p collapses to zero unless p divides n
        indecomposable_mod=lambda n, p=p: n == 0 or n % p == 0,
        # the retraction obstruction is char-p multiplication, which the
        # invertible-prime leg already screens; nothing is left to block
        torsion_free=lambda n: True,
        prime_invertible=lambda q, p=p: q != p,
        separably_closed=False,
        burnside_unit=False,
    )


def custom(name: str, *, char: int, indecomposable: bool,
           indecomposable_mod: Callable[[int], bool],
           torsion_free: Callable[[int], bool],
           prime_invertible: Callable[[int], bool],
           separably_closed: bool, burnside_unit: bool = False,
           rc_witness_map_to: Optional[RingDescriptor] = None,
           inflated: bool = False, action: str = "trivial") -> RingDescriptor:
    return RingDescriptor(
        name=name,
        kind="custom",
        char=char,
        indecomposable=indecomposable,
        indecomposable_mod=indecomposable_mod,
        torsion_free=torsion_free,
        prime_invertible=prime_invertible,
        separably_closed=separably_closed,
        burnside_unit=burnside_unit,
        rc_witness_map_to=rc_witness_map_to,
        inflated=inflated,
        action=action,
    )


def _require_supported(ring: RingDescriptor):
    if ring.action != "trivial":
        raise UnsupportedDescriptorError(
            f"descriptor {ring.name!r} carries a nontrivial action "
            f"({ring.action!r}); only trivial actions are implemented"
        )


def geometric_fixed_points(ring: RingDescriptor, cls: SubgroupClass) -> RingDescriptor:
    """Coefficients after applying geometric fixed points at a subgroup.

    Inflated descriptors are unchanged; anything else has no computable
    fixed-point descriptor here.
    """
    _require_supported(ring)
    if not ring.inflated:
        raise UnsupportedDescriptorError(
            f"descriptor {ring.name!r} is not inflated; its fixed points "
            f"at {cls.name} are not determined by this data"
        )
    return ring


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    rule: str
    convention: bool = False


def check_ic(ring: RingDescriptor, w: Group) -> CheckResult:
    """Indecomposability at a stage with Weyl group w."""
    _require_supported(ring)
    if w.order == 1:
        return CheckResult(True, "trivial Weyl group, holds by convention",
                           convention=True)
    if ring.kind == "sphere":
        ok = sphere_ic(w)
        if ok:
            return CheckResult(True, f"Weyl group of order {w.order} is a "
                                     "nontrivial p-group")
        return CheckResult(False, f"Weyl group of order {w.order} is not a "
                                  "nontrivial p-group")
    if not ring.indecomposable:
        return CheckResult(False, f"{ring.name} is decomposable")
    if ring.indecomposable_mod(w.order):
        return CheckResult(True, f"{ring.name} stays indecomposable "
                                 f"mod {w.order}")
    return CheckResult(False, f"{ring.name} decomposes mod {w.order}")


def check_rc(ring: RingDescriptor, w: Group) -> CheckResult:
    """Retraction obstruction at a stage with Weyl group w."""
    _require_supported(ring)
    if w.order == 1:
        return CheckResult(True, "trivial Weyl group, holds by convention",
                           convention=True)
    if ring.rc_witness_map_to is not None:
        target = ring.rc_witness_map_to
        inner = check_rc(target, w)
        return CheckResult(inner.ok,
                           f"delegated to {target.name}: {inner.rule}",
                           convention=inner.convention)
    if not ring.torsion_free(w.order):
        return CheckResult(False, f"{ring.name} has {w.order}-torsion")
    bad = [q for q in prime_factors(w.order) if ring.prime_invertible(q)]
    if bad:
        return CheckResult(False, f"prime {bad[0]} divides {w.order} and is "
                                  f"invertible in {ring.name}")
    return CheckResult(True, f"no {w.order}-torsion and no prime divisor of "
                             f"{w.order} is invertible in {ring.name}")


@dataclass(frozen=True)
class StageReport:
    """The verdict for one subgroup stage of the induction."""

    subgroup: SubgroupClass
    weyl: Group
    ic: CheckResult
    rc: CheckResult
    sep_closed: bool

    @property
    def passed(self) -> bool:
        return self.ic.ok and self.rc.ok

    def to_json(self):
        flags = []
        if self.ic.convention:
            flags.append("ic-convention")
        if self.rc.convention:
            flags.append("rc-convention")
        return {
            "subgroup": self.subgroup.name,
            "weyl_order": self.weyl.order,
            "ic": self.ic.ok,
            "rc": self.rc.ok,
            "sep_closed": self.sep_closed,
            "reasons": [f"ic: {self.ic.rule}", f"rc: {self.rc.rule}"],
            "convention_flags": flags,
        }


def stage_report(g: Group, cls: SubgroupClass, ring: RingDescriptor) -> StageReport:
    """Run both checks at one subgroup stage."""
    fixed = geometric_fixed_points(ring, cls)
    w = weyl_group(g, cls)
    return StageReport(
        subgroup=cls,
        weyl=w,
        ic=check_ic(fixed, w),
        rc=check_rc(fixed, w),
        sep_closed=fixed.separably_closed,
    )

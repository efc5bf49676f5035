"""Top-level classification: run the stage checks along an exhaustive
filtration, and when they all pass present the truncated groupoid of
G-sets; when they fail, try to produce an explicit non-standard witness.

The witness lives over the two-object set 2*[G/G]: splitting the ambient
category at each prime divisor turns its automorphisms into a power of
the symmetric group on two letters, both comparison maps become the
diagonal, and counting double cosets of the diagonal in that power shows
the comparison fiber has 2^(r-1) elements instead of one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .burnside import idempotent_block_count
from .conditions import (
    RingDescriptor,
    StageReport,
    geometric_fixed_points,
    stage_report,
)
from .families import Family, empty_family, exhaustive_filtration
from .group_core import (
    Group,
    direct_product,
    group_flags,
    identity_perm,
    perm_order,
    pmul,
    subgroup_conjugacy_classes,
    symmetric_group,
)
from .groupoid_calc import (
    FiniteGroupoid,
    GroupHom,
    GroupoidComponent,
    GroupoidFunctor,
    brute_force_pullback,
    pullback_pi0,
    truncated_gset_groupoid,
    unit_power_component,
)
from .gset import GSet, GSetType, orbit_type


class Verdict(Enum):
    ALL_STANDARD = "AllStandard"
    NON_STANDARD_WITNESS = "NonStandardWitness"
    CONDITIONS_FAIL_NO_WITNESS = "ConditionsFailNoWitness"
    UNIT_DECOMPOSES = "UnitDecomposes"


MODELING_NOTE = (
    "per-prime unit indecomposability is checked through the descriptor's "
    "prime-power modulus data; the fiber count itself is certified by "
    "explicit double-coset enumeration"
)


@dataclass(frozen=True)
class WitnessRecord:
    """An explicit two-object comparison square whose fiber is too big.

    eta records one automorphism tuple per prime divisor; the certificate
    lists every double-coset orbit, and eta's orbit differs from the
    identity's.
    """

    x1: GSetType
    x2: GSetType
    primes: tuple
    eta: tuple  # one of "id" / "swap" per prime
    fiber_size: int
    double_coset_certificate: tuple  # orbits, each a tuple of rendered tuples
    note: str = MODELING_NOTE

    @property
    def eta_text(self) -> str:
        return "(" + ",".join(self.eta) + ")"

    def to_json(self):
        return {
            "x1": self.x1.label(),
            "x2": self.x2.label(),
            "eta": self.eta_text,
            "fiber_size": self.fiber_size,
            "certificate": [list(orbit) for orbit in self.double_coset_certificate],
            "primes": list(self.primes),
            "note": self.note,
        }


@dataclass(frozen=True)
class WitnessProbe:
    """Outcome of the witness search: a record, or the reasons there is none."""

    record: WitnessRecord | None
    failures: tuple
    stage_reports: tuple

    @property
    def found(self) -> bool:
        return self.record is not None


def _describe_group(w: Group) -> str:
    if any(perm_order(x) == w.order for x in w.elements):
        return f"C{w.order}"
    return f"of order {w.order}"


def _render_blocks(eta, r: int) -> str:
    parts = ["id" if eta[2 * i] == 2 * i else "swap" for i in range(r)]
    return "(" + ",".join(parts) + ")"


def _build_witness(g: Group, ring: RingDescriptor, primes) -> WitnessRecord:
    r = len(primes)
    top = [c for c in subgroup_conjugacy_classes(g) if c.order == g.order]
    x1 = GSetType.from_counts(g, {top[0]: 2})

    s2 = symmetric_group(2)
    # the per-prime indecomposability precondition was checked by the
    # caller, so each local corner is a genuine two-fold unit power
    per_prime = [
        unit_power_component(2, unit_indecomposable=True) for _ in primes
    ]
    power = per_prime[0].aut
    for comp in per_prime[1:]:
        power = direct_product(power, comp.aut)
    all_swap = tuple(2 * (i // 2) + (1 - i % 2) for i in range(2 * r))
    diag = GroupHom.from_generator_images(s2, power, {s2.generators[0]: all_swap})
    assert diag is not None

    source = FiniteGroupoid([GroupoidComponent("2*[G/G]", s2)])
    corner = FiniteGroupoid([GroupoidComponent("unit-power", power)])
    leg = GroupoidFunctor(source, corner, {"2*[G/G]": "unit-power"},
                          {"2*[G/G]": diag})

    comps = pullback_pi0(leg, leg)
    fiber = len(comps)
    assert all(p.fiber_size == fiber for p in comps)
    bf = brute_force_pullback(leg, leg)
    assert len(bf) == fiber, "brute-force double-coset count disagrees"

    diag_els = sorted(diag.image_group().elements)
    orbits = []
    rep_of: dict = {}
    for p in comps:
        members = sorted(
            {pmul(pmul(u, p.eta_class), v) for u in diag_els for v in diag_els}
        )
        orbits.append(tuple(_render_blocks(m, r) for m in members))
        for m in members:
            rep_of[m] = p.eta_class
    ident = identity_perm(2 * r)
    eta_perm = tuple(range(2 * r - 2)) + (2 * r - 1, 2 * r - 2)
    assert rep_of[eta_perm] != rep_of[ident], "witness class collapsed"

    return WitnessRecord(
        x1=x1,
        x2=x1,
        primes=tuple(primes),
        eta=("id",) * (r - 1) + ("swap",),
        fiber_size=fiber,
        double_coset_certificate=tuple(sorted(orbits)),
    )


def witness_nonstandard(g: Group, ring: RingDescriptor) -> WitnessProbe:
    """Search for the two-object non-standard witness.

    Needs at least two prime divisors, passing stage checks at every
    nontrivial subgroup, separably closed fixed points at the bottom, and
    per-prime indecomposability of the coefficients.  Returns the record,
    or the list of violated preconditions.
    """
    primes = sorted(group_flags(g).prime_divisors)
    r = len(primes)
    failures = []
    if r < 2:
        failures.append(
            f"group order {g.order} has {r} prime divisor(s); need at least 2"
        )

    reports = []
    for cls in subgroup_conjugacy_classes(g):
        rep = stage_report(g, cls, ring)
        reports.append(rep)
        if cls.order == 1 or rep.passed:
            continue
        which = "indecomposability" if not rep.ic.ok else "retraction"
        failures.append(
            f"stage {cls.name}: {which} fails for Weyl group "
            f"{_describe_group(rep.weyl)}"
        )

    triv = subgroup_conjugacy_classes(g)[0]
    fixed = geometric_fixed_points(ring, triv)
    if not fixed.separably_closed:
        failures.append(
            f"fixed points of {ring.name} at the trivial subgroup are not "
            "separably closed"
        )

    for p in primes:
        k = 1
        n = g.order
        while n % p == 0:
            k *= p
            n //= p
        if not ring.indecomposable_mod(k):
            failures.append(f"{ring.name} decomposes mod {k}")

    if failures:
        return WitnessProbe(None, tuple(failures), tuple(reports))
    return WitnessProbe(_build_witness(g, ring, primes), (), tuple(reports))


@dataclass(frozen=True)
class ClassificationOutcome:
    verdict: Verdict
    stage_reports: tuple
    groupoid: FiniteGroupoid | None = None
    witness: WitnessRecord | None = None
    notes: tuple = ()

    def __post_init__(self):
        assert (self.groupoid is not None) == (self.verdict is Verdict.ALL_STANDARD)

    def to_json(self):
        out = {
            "verdict": self.verdict.value,
            "stages": [rep.to_json() for rep in self.stage_reports],
        }
        if self.groupoid is not None:
            out["groupoid"] = self.groupoid.to_json()
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def classify(g: Group, ring: RingDescriptor, max_size: int,
             family: Family | None = None) -> ClassificationOutcome:
    """Decide whether every separable algebra with isotropy outside the
    family comes from a G-set, and present the evidence."""
    if family is None:
        family = empty_family(g)
    flags = group_flags(g)
    if not flags.is_solvable and ring.burnside_unit:
        blocks = idempotent_block_count(g)
        return ClassificationOutcome(
            verdict=Verdict.UNIT_DECOMPOSES,
            stage_reports=(),
            notes=(
                "the unit decomposes non-trivially as a direct product: "
                f"its zeroth ring has {blocks} idempotent blocks",
            ),
        )

    filtration = exhaustive_filtration(g, family)
    reports = tuple(stage_report(g, cls, ring) for cls in filtration.added)
    if all(rep.passed for rep in reports):
        return ClassificationOutcome(
            verdict=Verdict.ALL_STANDARD,
            stage_reports=reports,
            groupoid=truncated_gset_groupoid(g, family, max_size),
        )

    probe = witness_nonstandard(g, ring)
    if probe.found:
        return ClassificationOutcome(
            verdict=Verdict.NON_STANDARD_WITNESS,
            stage_reports=reports,
            witness=probe.record,
        )
    return ClassificationOutcome(
        verdict=Verdict.CONDITIONS_FAIL_NO_WITNESS,
        stage_reports=reports,
        notes=probe.failures,
    )


def standard_algebra(g: Group, family: Family, x: GSet) -> str:
    """The component label of x in the classification groupoid.

    x must have isotropy outside the family; deleting the orbits of a
    newly added class commutes with this labeling.
    """
    t = orbit_type(x)
    offenders = [cls.name for cls, _ in t.entries if cls in family]
    if offenders:
        raise ValueError(
            f"isotropy classes {offenders} lie inside the family"
        )
    return t.label()

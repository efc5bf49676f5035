"""Group construction, subgroup classification, Weyl groups, double cosets."""

import pytest

from equisep.group_core import (
    GroupSpecError,
    ResourceLimitError,
    class_of_subgroup,
    double_cosets,
    encode_subgroup,
    group_flags,
    is_subconjugate,
    make_group,
    normalizer,
    perfect_subgroup_classes,
    pconj,
    pinv,
    pmul,
    subgroup_conjugacy_classes,
    weyl_group,
    weyl_group_with_section,
)

from . import oracles


@pytest.fixture(autouse=True)
def _no_env_bound(monkeypatch):
    monkeypatch.delenv("EQUISEP_MAX_ORDER", raising=False)


def test_make_group_named_families():
    assert make_group("C6").order == 6
    assert make_group("S3").order == 6
    assert make_group("A4").order == 12
    assert make_group("D4").order == 8
    assert make_group("Q8").order == 8
    assert make_group("C2xC2xC2").order == 8
    assert make_group("D1").order == 2
    assert make_group("D2").order == 4


def test_make_group_product_isomorphic_to_cyclic():
    g = make_group("C2xC3")
    assert g.order == 6
    assert oracles.find_isomorphism(g, make_group("C6")) is not None


def test_make_group_perm_spec():
    g = make_group("perm:5:(1 2 3)(4 5);(1 2)")
    assert g.degree == 5
    assert g.order == 12


def test_make_group_order_bound():
    with pytest.raises(ResourceLimitError):
        make_group("S8")
    with pytest.raises(ResourceLimitError):
        make_group("perm:8:(1 2);(1 2 3 4 5 6 7 8)", max_order=100)


def test_make_group_env_override(monkeypatch):
    monkeypatch.setenv("EQUISEP_MAX_ORDER", "6000")
    assert make_group("S7").order == 5040
    monkeypatch.setenv("EQUISEP_MAX_ORDER", "10")
    with pytest.raises(ResourceLimitError):
        make_group("C12")


@pytest.mark.parametrize(
    "bad",
    ["", "C0", "C6x", "B5", "perm:3:(1 4)", "perm:0:(1)", "perm:3:(1 1 2)",
     "perm:x:(1 2)", "S3y", "perm:3"],
)
def test_make_group_rejects_malformed(bad):
    with pytest.raises(GroupSpecError):
        make_group(bad)


def test_subgroup_classes_c6():
    g = make_group("C6")
    classes = subgroup_conjugacy_classes(g)
    assert [c.order for c in classes] == [1, 2, 3, 6]
    assert all(c.class_size == 1 for c in classes)


def test_subgroup_classes_s3():
    g = make_group("S3")
    classes = subgroup_conjugacy_classes(g)
    assert [c.order for c in classes] == [1, 2, 3, 6]
    sizes = {c.order: c.class_size for c in classes}
    assert sizes[2] == 3
    assert sizes[3] == 1


def test_subgroup_classes_q8():
    classes = subgroup_conjugacy_classes(make_group("Q8"))
    assert [c.order for c in classes] == [1, 2, 4, 4, 4, 8]
    assert all(c.class_size == 1 for c in classes)


def test_class_names_and_sort_order():
    classes = subgroup_conjugacy_classes(make_group("S3"))
    assert [c.name for c in classes] == ["1a", "2a", "3a", "6a"]
    keys = [(c.order, c.canonical_key) for c in classes]
    assert keys == sorted(keys)


def test_representative_is_lex_minimal_in_class():
    g = make_group("S4")
    for cls in subgroup_conjugacy_classes(g):
        rep = cls.representative.elements
        best = min(
            (frozenset(pconj(x, h) for h in rep) for x in g.elements),
            key=encode_subgroup,
        )
        assert encode_subgroup(best) == cls.canonical_key == encode_subgroup(rep)


@pytest.mark.parametrize("spec", ["C6", "S3", "D4", "A4", "C2xC2"])
def test_subgroup_counts_against_power_set_scan(spec):
    g = make_group(spec)
    subs = oracles.brute_force_subgroups(g)
    from equisep.group_core import _all_subgroups

    assert len(_all_subgroups(g)) == len(subs)
    assert len(subgroup_conjugacy_classes(g)) == oracles.conjugacy_class_count(
        g, subs
    )


def test_classes_isomorphism_invariant():
    a = make_group("C2xC3")
    b = make_group("C6")
    profile = lambda g: sorted(
        (c.order, c.class_size) for c in subgroup_conjugacy_classes(g)
    )
    assert profile(a) == profile(b)


def test_orbit_stabilizer_for_classes():
    g = make_group("S4")
    for cls in subgroup_conjugacy_classes(g):
        n = normalizer(g, cls.representative)
        assert cls.class_size * n.order == g.order


def test_weyl_group_examples():
    s3 = make_group("S3")
    classes = subgroup_conjugacy_classes(s3)
    by_order = {c.order: c for c in classes}
    assert weyl_group(s3, by_order[2]).order == 1
    assert weyl_group(s3, by_order[6]).order == 1
    w = weyl_group(s3, by_order[1])
    assert w.order == 6
    assert oracles.find_isomorphism(w, s3) is not None


def test_weyl_order_matches_normalizer_quotient():
    g = make_group("A4")
    for cls in subgroup_conjugacy_classes(g):
        n = normalizer(g, cls.representative)
        assert weyl_group(g, cls).order * cls.order == n.order


def test_weyl_section_induces_quotient():
    g = make_group("D4")
    for cls in subgroup_conjugacy_classes(g):
        w, section = weyl_group_with_section(g, cls)
        h = cls.representative
        n = normalizer(g, h)
        for wp, rep in section.items():
            assert rep in n.elements
        assert len(section) == w.order


def test_double_cosets_s3_example():
    g = make_group("S3")
    flip = next(
        c for c in subgroup_conjugacy_classes(g) if c.order == 2
    ).representative
    dec = double_cosets(g, flip, flip)
    assert sorted(dec.sizes) == [2, 4]
    assert sum(dec.sizes) == g.order


def test_double_coset_size_formula():
    g = make_group("S4")
    classes = subgroup_conjugacy_classes(g)
    h = next(c for c in classes if c.order == 4).representative
    k = next(c for c in classes if c.order == 6).representative
    dec = double_cosets(g, h, k)
    assert sum(dec.sizes) == g.order
    for rep, size in zip(dec.representatives, dec.sizes):
        cap = h.elements & frozenset(pconj(rep, x) for x in k.elements)
        assert size == h.order * k.order // len(cap)


def test_double_cosets_rejects_non_subgroups():
    g = make_group("S3")
    other = make_group("C2")
    with pytest.raises(ValueError):
        double_cosets(g, other, other)


def test_group_flags():
    a5 = make_group("A5")
    f = group_flags(a5)
    assert not f.is_solvable
    assert not f.is_p_group
    assert f.prime_divisors == {2, 3, 5}

    q8 = group_flags(make_group("Q8"))
    assert q8.is_p_group and q8.p_prime == 2 and q8.is_solvable

    triv = group_flags(make_group("C1"))
    assert triv.is_trivial and not triv.is_p_group and triv.is_solvable

    assert group_flags(make_group("S4")).is_solvable


def test_perfect_subgroup_classes():
    a5 = make_group("A5")
    assert [c.order for c in perfect_subgroup_classes(a5)] == [1, 60]
    s5 = make_group("S5")
    assert [c.order for c in perfect_subgroup_classes(s5)] == [1, 60]
    for spec in ["C6", "S4", "D4", "Q8"]:
        g = make_group(spec)
        assert [c.order for c in perfect_subgroup_classes(g)] == [1]


def test_solvable_iff_only_trivial_perfect_class():
    for spec in ["C1", "C6", "S3", "S4", "A4", "A5", "S5", "Q8"]:
        g = make_group(spec)
        perfect = perfect_subgroup_classes(g)
        assert group_flags(g).is_solvable == (len(perfect) == 1)


def test_class_of_subgroup_lookup():
    g = make_group("S3")
    flips = [x for x in g.elements if x != g.identity and pmul(x, x) == g.identity]
    assert len(flips) == 3
    found = {class_of_subgroup(g, frozenset([g.identity, f])) for f in flips}
    assert len(found) == 1
    assert next(iter(found)).order == 2


def test_subconjugacy_relation():
    g = make_group("S4")
    classes = subgroup_conjugacy_classes(g)
    triv, full = classes[0], classes[-1]
    for cls in classes:
        assert is_subconjugate(g, triv, cls)
        assert is_subconjugate(g, cls, full)
        assert is_subconjugate(g, cls, cls)
    two = next(c for c in classes if c.order == 2)
    three = next(c for c in classes if c.order == 3)
    assert not is_subconjugate(g, two, three)
    assert not is_subconjugate(g, three, two)


def test_group_equality_and_determinism():
    a = make_group("C6")
    b = make_group("C6")
    assert a == b and hash(a) == hash(b)
    ca = subgroup_conjugacy_classes(a)
    cb = subgroup_conjugacy_classes(b)
    assert [c.canonical_key for c in ca] == [c.canonical_key for c in cb]


def test_inverse_and_conjugation_helpers():
    g = make_group("S4")
    for x in list(g)[:8]:
        assert pmul(x, pinv(x)) == g.identity
    a, b = g.generators[0], g.generators[1]
    assert pconj(a, b) == pmul(pmul(a, b), pinv(a))

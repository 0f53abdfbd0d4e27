import pytest

from grouptrees import spectra as sp
from grouptrees.graphs import power_graph
from grouptrees.groups import catalog
from grouptrees.structure import (
    Family,
    UniversalCase,
    check_extension_bound,
    check_subgroup_product_bound,
    classify_power_free,
    coprime_witness,
    cyclic_subgroups,
    find_power_free_decomposition,
    involution_set,
    is_frobenius_over,
    kappa_power,
    power_equals_commuting,
    universal_vertices,
    verify_decomposition,
)
from grouptrees.treecount import tree_number


def _generated(G, g):
    return tuple(sorted(G.cyclic_subgroup(g)))


@pytest.mark.parametrize(
    "spec, case, size",
    [
        ("Z:12", UniversalCase.CYCLIC_NON_PRIME_POWER, 5),
        ("Z:8", UniversalCase.CYCLIC_PRIME_POWER, 8),
        ("Q:8", UniversalCase.GENERALIZED_QUATERNION, 2),
        ("Q:16", UniversalCase.GENERALIZED_QUATERNION, 2),
        ("S:3", UniversalCase.TRIVIAL_ONLY, 1),
        ("A:4", UniversalCase.TRIVIAL_ONLY, 1),
    ],
)
def test_universal_vertices(group, spec, case, size):
    G = group(spec)
    r = universal_vertices(G)
    assert r.classification == case and len(r.universal_set) == size
    degrees = power_graph(G).degrees
    assert set(r.universal_set) == {v for v in range(G.order) if degrees[v] == G.order - 1}


def test_quaternion_universal_set(group):
    Q8 = group("Q:8")
    assert universal_vertices(Q8).universal_set == (0, Q8.elements_of_order(2)[0])


@pytest.mark.parametrize("spec", [s for s in catalog(64)])
def test_universal_lemma_applies_throughout_catalog(group, spec):
    universal_vertices(group(spec))


def test_coprime_witness_and_involutions(group):
    w = coprime_witness(group("Z:6"))
    assert sorted(int(group("Z:6").element_orders[g]) for g in w) == [2, 3]
    assert len(coprime_witness(group("Z:8"))) == 1
    A5 = group("A:5")
    assert sorted(int(A5.element_orders[g]) for g in coprime_witness(A5)) == [2, 3, 5]
    assert len(involution_set(group("D:8"))) == 5
    assert len(involution_set(group("Q:8"))) == 1
    assert involution_set(group("Z:9")) == []


def test_decomposition_examples(group):
    for n in (1, 2, 3):
        assert find_power_free_decomposition(group("Z:4"), n) is None
    Q16 = group("Q:16")
    dec = find_power_free_decomposition(Q16, 2)
    assert len(dec.clique_part) == 8 and sorted(map(len, dec.blocks)) == [4, 4]
    D8 = group("D:8")
    dec = find_power_free_decomposition(D8, 1)
    assert set(dec.clique_part) == set(D8.cyclic_subgroup(1)) and len(dec.blocks[0]) == 4
    assert all(D8.element_orders[g] == 2 for g in dec.blocks[0])
    assert find_power_free_decomposition(group("Q:8"), 1) is None
    with pytest.raises(ValueError):
        find_power_free_decomposition(group("Z:1"), 1)
    with pytest.raises(ValueError):
        find_power_free_decomposition(D8, 0)


@pytest.mark.parametrize("spec, n", [("Q:8", 2), ("Q:16", 2), ("Q:32", 2), ("D:8", 1), ("D:18", 1), ("EA:8", 1), ("D:10", 1)])
def test_decompositions_reverify(group, spec, n):
    G = group(spec)
    dec = find_power_free_decomposition(G, n)
    check = verify_decomposition(G, dec)
    assert check.necessary_condition and check.prime_support
    adj = power_graph(G).adjacency
    C = dec.clique_part
    assert all(adj[a, b] for a in C for b in C if a != b)
    for b in dec.blocks:
        assert not any(adj[x, y] for x in b for y in b)


def test_normal_fixed_point_free_case(group):
    # p = 5 does not divide 2! for D10 with n = 1
    G = group("D:10")
    assert verify_decomposition(G, find_power_free_decomposition(G, 1)).normal_fixed_point_free is True


@pytest.mark.parametrize(
    "spec, family",
    [("EA:4", Family.ELEMENTARY_ABELIAN_2), ("D:18", Family.DIHEDRAL_FROBENIUS), ("D:16", Family.DIHEDRAL_2_POWER), ("S:4", None)],
)
def test_classification_examples(group, spec, family):
    v = classify_power_free(group(spec))
    assert v.predicted == family and v.has_1pfd == (family is not None) and v.consistent


def test_s3_is_dihedral_frobenius(group):
    assert classify_power_free(group("S:3")).predicted == Family.DIHEDRAL_FROBENIUS


def test_subgroup_product_examples(group):
    S3 = group("S:3")
    r = check_subgroup_product_bound(S3, [_generated(S3, S3.elements_of_order(3)[0]), _generated(S3, S3.elements_of_order(2)[0])])
    assert (r.lhs, r.rhs, r.holds, r.equality) == (3, 3, True, True)
    Q8 = group("Q:8")
    quarter = [s for s in cyclic_subgroups(Q8) if len(s) == 4]
    assert len(quarter) == 3
    with pytest.raises(ValueError):  # they share the involution
        check_subgroup_product_bound(Q8, quarter)
    assert check_subgroup_product_bound(Q8, quarter[:1]).holds
    Z6 = group("Z:6")
    r = check_subgroup_product_bound(Z6, [(0, 2, 4), (0, 3)])
    assert (r.lhs, r.rhs, r.holds) == (540, 3, True)
    with pytest.raises(ValueError):
        check_subgroup_product_bound(Z6, [(0, 1)])


def test_extension_examples(group):
    S3 = group("S:3")
    r = check_extension_bound(S3, _generated(S3, S3.elements_of_order(3)[0]), 2)
    assert (r.lhs, r.rhs, r.equality, r.frobenius_structure) == (3, 3, True, True)
    r = check_extension_bound(group("Z:6"), (0, 2, 4), 6)
    assert r.factors == (3, 3) and r.rhs == 9 and r.lhs == 540 and r.holds and not r.equality
    Q8 = group("Q:8")
    H = _generated(Q8, Q8.elements_of_order(4)[0])
    r = check_extension_bound(Q8, H, 4)
    q8_oracle = sp.kappa_from_spectrum(sp.spectrum(sp.parse_expr("K(2) * (3 x K(2))")))
    assert r.factors == (3, 16) and r.rhs == 48 and r.lhs == q8_oracle == 2048 and r.holds
    with pytest.raises(ValueError):
        check_extension_bound(Q8, H, 8)


def test_equality_without_frobenius_in_2_groups(group):
    D8 = group("D:8")
    r = check_extension_bound(D8, tuple(sorted(D8.cyclic_subgroup(1))), 2)
    assert r.equality and r.outside_involutions and not r.frobenius_structure


def test_equality_cases(group):
    assert kappa_power(group("S:3")) == kappa_power(group("Z:3")) == 3
    assert kappa_power(group("D:18")) == kappa_power(group("Z:9")) == 3**14
    assert is_frobenius_over(group("D:18"), tuple(sorted(group("D:18").cyclic_subgroup(1))))


@pytest.mark.parametrize("spec", ["S:4", "D:12", "Q:16", "A:4"])
def test_subgroup_kappa_is_intrinsic(group, spec):
    G = group(spec)
    for H in cyclic_subgroups(G)[-3:]:
        standalone = kappa_power(G.subgroup(H))
        induced = tree_number(power_graph(G).induced([int(h) for h in H]))
        assert standalone == induced


def test_power_equals_commuting_examples(group):
    assert power_equals_commuting(group("Z:8"))
    assert power_equals_commuting(group("Q:16"))
    assert not power_equals_commuting(group("Z:6"))
    assert power_equals_commuting(group("S:3"))

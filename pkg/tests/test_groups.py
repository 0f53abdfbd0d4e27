import itertools

import numpy as np
import pytest

from grouptrees.groups import (
    CayleyTableError,
    GroupSpecError,
    build_group,
    catalog,
    commutes,
    element_info,
    family_order,
    is_power_related,
    read_cayley_file,
    verify_group_table,
    write_cayley_file,
)
from grouptrees.arith import totient


@pytest.mark.parametrize(
    "spec, order",
    [("Z:1", 1), ("PSL2:7", 168), ("A:5", 60), ("A:6", 360), ("S:4", 24), ("D:18", 18),
     ("Q:16", 16), ("EA:27", 27), ("Z:2 x Z:4", 8), ("Z:2 * Z:3 * Z:5", 30), ("PSL2:11", 660)],
)
def test_orders(spec, order):
    G = build_group(spec)
    assert G.order == order == family_order(spec)


@pytest.mark.parametrize("spec", ["Q:12", "D:7", "D:2", "PSL2:4", "PSL2:3", "EA:12", "X:3", "Z:", "Z:4 x", "Z:0"])
def test_rejected_specs(spec):
    with pytest.raises(GroupSpecError):
        build_group(spec)


def _order_by_multiplication(G, i):
    k, x = 1, i
    while x != 0:
        x = G.mult(x, i)
        k += 1
    return k


def test_element_info_examples(group):
    info = element_info(group("Z:6"), 1)
    assert info.order == 6 and info.cyclic_subgroup == tuple(range(6))
    Q8 = group("Q:8")
    (inv,) = Q8.elements_of_order(2)
    assert element_info(Q8, inv).order == 2
    with pytest.raises(IndexError):
        element_info(Q8, 8)


@pytest.mark.parametrize("spec", ["PSL2:7", "A:5", "S:4", "Q:16", "Z:2 x Z:6"])
def test_element_info_matches_repeated_multiplication(group, spec):
    G = group(spec)
    for i in range(G.order):
        info = element_info(G, i)
        assert info.order == _order_by_multiplication(G, i)
        assert 0 in info.cyclic_subgroup and len(info.cyclic_subgroup) == info.order
        sub = set(info.cyclic_subgroup)
        assert all(G.mult(a, b) in sub for a in sub for b in sub)
        assert len(info.generators) == totient(info.order)


def test_psl27_orders(group):
    assert set(group("PSL2:7").element_orders.tolist()[1:]) == {2, 3, 4, 7}


def test_power_relation_examples(group):
    Z6 = group("Z:6")
    assert is_power_related(Z6, 2, 4)
    assert not is_power_related(Z6, 2, 3)
    S3 = group("S:3")
    t1, t2 = S3.elements_of_order(2)[:2]
    assert not is_power_related(S3, t1, t2)
    with pytest.raises(ValueError):
        is_power_related(Z6, 2, 2)


def test_commutes_examples(group):
    Z5x2 = group("Z:10")
    assert all(commutes(Z5x2, i, j) for i, j in itertools.combinations(range(10), 2))
    Q8 = group("Q:8")
    # x = index 1, y = index 4 in the x^a y^e layout
    assert not commutes(Q8, 1, 4)
    D8 = group("D:8")
    assert not commutes(D8, 1, 4)
    with pytest.raises(ValueError):
        commutes(D8, 3, 3)


@pytest.mark.parametrize("spec", catalog(64) + ["PSL2:7", "A:6"])
def test_power_related_implies_commuting(group, spec):
    G = group(spec)
    m = G.cyclic_membership
    power = m | m.T
    assert ((~power) | (G.table == G.table.T)).all()


@pytest.mark.parametrize("spec", ["PSL2:7", "A:5"])
def test_many_elements_of_each_prime_order(group, spec):
    G = group(spec)
    census = G.order_census()
    for p in G.prime_divisors():
        assert census[p] >= p * p - 1


def test_cyclic_abelian_quaternion_unique_involution(group):
    for n in range(1, 40):
        assert group(f"Z:{n}").is_abelian
    for k in range(3, 8):
        assert len(group(f"Q:{2**k}").elements_of_order(2)) == 1


@pytest.mark.parametrize("spec", ["S:4", "A:5", "PSL2:7"])
def test_permutations_match_table(group, spec):
    G = group(spec)
    assert G.backing == "permutation"
    for i, j in [(1, 2), (3, 1), (G.order - 1, 2), (5, 5)]:
        composed = tuple(G.perms[i][x] for x in G.perms[j])
        assert G.perms.index(composed) == G.mult(i, j)


def test_indexing_is_deterministic():
    a, b = build_group("PSL2:7"), build_group("PSL2:7")
    assert (a.table == b.table).all() and a.perms == b.perms
    assert a.perms[0] == tuple(range(8))


def test_direct_product_indexing(group):
    G = group("Z:2 x Z:3")
    for (a1, b1), (a2, b2) in itertools.product(itertools.product(range(2), range(3)), repeat=2):
        assert G.mult(a1 * 3 + b1, a2 * 3 + b2) == ((a1 + a2) % 2) * 3 + (b1 + b2) % 3


def test_cayley_file_roundtrip(tmp_path, group):
    path = tmp_path / "q8.txt"
    write_cayley_file(group("Q:8"), path)
    G = build_group(f"file:{path}")
    assert (G.table == group("Q:8").table).all()


@pytest.mark.parametrize(
    "text",
    [
        "2\n0 1\n1 1\n",  # not Latin
        "2\n1 0\n0 1\n",  # identity not at index 0
        "3\n0 1 2\n1 2 0\n",  # missing row
        "2\n0 1\n1 x\n",  # junk
        "",
    ],
)
def test_cayley_file_rejections(tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    with pytest.raises(CayleyTableError):
        read_cayley_file(path)


def test_nonassociative_latin_square_rejected():
    # Latin square with identity 0 that is not associative (order 5 loop).
    t = np.array([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]])
    with pytest.raises(CayleyTableError, match="associativity"):
        verify_group_table(t)


def test_missing_file():
    with pytest.raises(CayleyTableError):
        build_group("file:/nonexistent/table.txt")


def test_large_group_spot_check():
    G = build_group("S:6")
    assert G.order == 720
    G.check_axioms(np.random.default_rng(1))

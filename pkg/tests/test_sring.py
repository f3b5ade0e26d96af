from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from srings import sring as sr
from srings.corpus import builtin_corpus, parse_group_spec
from srings.groups import build_alternating, build_cyclic, build_symmetric, from_cayley_table

import oracles


def test_class_algebra_of_s3():
    g = build_symmetric(3)
    a = sr.from_partition(g, g.conjugacy.classes)
    assert a.rank == 3 and a.is_central
    assert a == sr.class_algebra(g)


def test_subgroup_wedge_is_valid():
    # {e}, H minus e, G minus H is an S-ring for any subgroup H
    g = build_symmetric(3)
    t = min(g.conjugacy.classes[2])
    rest = set(range(1, 6)) - {t}
    a = sr.from_partition(g, [[0], [t], rest])
    assert a.rank == 3 and not a.is_central
    assert oracles.is_sring_naive(g, a.basic_sets)


def test_bad_partition_reports_witness():
    g = build_symmetric(3)
    c, t = sorted(g.conjugacy.classes[1]), sorted(g.conjugacy.classes[2])
    parts = [[0], [t[0]], [t[1]], [t[2]], c]
    assert not oracles.is_sring_naive(g, parts)
    with pytest.raises(sr.S3Violation) as exc:
        sr.from_partition(g, parts)
    w = exc.value.witness
    assert len(set(w["coefficients"])) > 1 and set(w["elements"]) <= set(w["Z"])


def test_axiom_errors():
    g = build_cyclic(4)
    with pytest.raises(sr.NotPartition):
        sr.from_partition(g, [[0], [1, 2]])
    with pytest.raises(sr.NotPartition):
        sr.from_partition(g, [[0], [1, 2], [2, 3]])
    with pytest.raises(sr.S1Violation):
        sr.from_partition(g, [[0, 2], [1, 3]])
    with pytest.raises(sr.S2Violation):
        sr.from_partition(g, [[0], [1], [2, 3]])


def test_trivial_rings():
    for spec in ["Z2", "S3", "A5", "E27"]:
        g = parse_group_spec(spec)
        t = sr.trivial_sring(g)
        assert t.rank == 2 and t.is_central
        assert sr.a_subgroups(t).members == (frozenset({0}), frozenset(range(g.order)))
        assert sr.is_primitive(t)


def test_class_algebra_ranks():
    assert sr.class_algebra(build_cyclic(7)).rank == 7
    assert sr.class_algebra(build_symmetric(3)).rank == 3
    assert sr.class_algebra(build_alternating(5)).rank == 5


def test_s3_structure_constant():
    a = sr.class_algebra(build_symmetric(3))
    c = sr.structure_constants(a)
    t, k = 2, 1  # transpositions, 3-cycles
    assert c[t, t, k] == 3 and c[t, t, 0] == 3


def test_a_subgroups_examples():
    s3 = build_symmetric(3)
    lat = sr.a_subgroups(sr.class_algebra(s3))
    assert set(lat.members) == {frozenset({0}), frozenset({0} | s3.conjugacy.classes[1]), frozenset(range(6))}
    a5 = build_alternating(5)
    assert set(sr.a_subgroups(sr.class_algebra(a5)).members) == {frozenset({0}), frozenset(range(60))}
    assert not sr.is_primitive(sr.class_algebra(s3))
    assert sr.is_primitive(sr.class_algebra(a5))


def test_lattice_tables():
    g = parse_group_spec("D8")
    lat = sr.a_subgroups(sr.class_algebra(g))
    for i, a in enumerate(lat.members):
        for j, b in enumerate(lat.members):
            assert lat.members[lat.meet[i, j]] == a & b
            assert lat.members[lat.join[i, j]] == oracles.closure(g, a | b)


def test_fusion_examples():
    s3 = build_symmetric(3)
    z, t = sr.class_algebra(s3), sr.trivial_sring(s3)
    assert sr.is_fusion_of(t, z)
    assert sr.is_fusion_of(z, z)
    assert not sr.is_fusion_of(z, t)


def test_radical_of_basic_is_a_subgroup():
    for spec in ["D18", "F21", "Q8", "S4"]:
        for a in sr.enumerate_central_srings(parse_group_spec(spec)):
            for b in a.basic_sets:
                r = sr.radical_of_basic(a, b).members
                assert r in sr.a_subgroups(a) or r == frozenset({0})


def test_non_central_ring():
    g = build_symmetric(3)
    a = sr.from_partition(g, [[x] for x in range(6)])
    assert not a.is_central and not a.is_commutative
    with pytest.raises(ValueError):
        sr.is_proper_central(a)


def test_enumeration_examples():
    assert len(sr.enumerate_central_srings(build_symmetric(3))) == 2
    z4 = sr.enumerate_central_srings(build_cyclic(4))
    assert {a.key for a in z4} == {
        ((0,), (1,), (2,), (3,)),
        ((0,), (2,), (1, 3)),
        ((0,), (1, 2, 3)),
    }
    assert len(sr.enumerate_central_srings(build_cyclic(2))) == 1


def test_enumeration_limits():
    with pytest.raises(sr.ClassCountExceeded):
        sr.enumerate_central_srings(build_cyclic(20), max_classes=14)
    with pytest.raises(sr.ResultLimitExceeded):
        sr.enumerate_central_srings(build_cyclic(8), max_results=3)


SMALL = [s for s in builtin_corpus() if len(parse_group_spec(s).conjugacy) <= 6]


@pytest.mark.parametrize("spec", SMALL)
def test_enumeration_matches_bruteforce(spec):
    g = parse_group_spec(spec)
    ours = {frozenset(a.basic_sets) for a in sr.enumerate_central_srings(g)}
    assert ours == oracles.central_srings_bruteforce(g)


@pytest.mark.parametrize("spec", ["S3", "D8", "Q8", "Z6", "D10", "A4", "F21", "Z3xZ3", "S4", "D18", "F20"])
def test_primitivity_matches_bruteforce(spec):
    g = parse_group_spec(spec)
    for a in sr.enumerate_central_srings(g):
        assert sr.is_primitive(a) == oracles.is_primitive_bruteforce(g, a.basic_sets)
        assert set(sr.a_subgroups(a).members) == set(oracles.a_subgroups_bruteforce(g, a.basic_sets))


@pytest.mark.parametrize("spec", builtin_corpus())
def test_class_algebra_constants_balance(spec):
    g = parse_group_spec(spec)
    for a in (sr.class_algebra(g), sr.trivial_sring(g)):
        sizes = np.array([len(b) for b in a.basic_sets], dtype=object)
        c = a.constants.astype(object)
        lhs = np.tensordot(c, sizes, axes=([2], [0]))
        assert (lhs == np.outer(sizes, sizes)).all()


@pytest.mark.parametrize("spec", ["D8", "Q8", "S3", "A4"])
def test_constants_match_convolution(spec):
    g = parse_group_spec(spec)
    for a in sr.enumerate_central_srings(g):
        assert oracles.is_sring_naive(g, a.basic_sets)
        for i, x in enumerate(a.basic_sets):
            for j, y in enumerate(a.basic_sets):
                prod = oracles.convolve(g, oracles.indicator(x), oracles.indicator(y))
                for k, z in enumerate(a.basic_sets):
                    assert a.constants[i, j, k] == prod.get(min(z), 0)


def relabel(g, perm):
    n = g.order
    mult = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            mult[perm[x], perm[y]] = perm[int(g.mult[x, y])]
    return from_cayley_table({"table": mult.tolist()})


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["S3", "D8", "Q8", "Z6", "D10", "A4", "Z8"]), st.randoms(use_true_random=False))
def test_enumeration_invariant_under_relabeling(spec, rnd):
    g = parse_group_spec(spec)
    rest = list(range(1, g.order))
    rnd.shuffle(rest)
    perm = [0] + rest
    h = relabel(g, perm)
    ours = sr.enumerate_central_srings(g)
    theirs = sr.enumerate_central_srings(h)
    assert Counter(a.rank for a in ours) == Counter(a.rank for a in theirs)
    mapped = {frozenset(frozenset(perm[x] for x in b) for b in a.basic_sets) for a in ours}
    assert mapped == {frozenset(a.basic_sets) for a in theirs}


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["S4", "D12", "F21", "Q8", "Z3xZ3", "D18"]), st.data())
def test_schur_wielandt_support(spec, data):
    """Supports of products of basic sets are A-sets."""
    g = parse_group_spec(spec)
    rings = sr.enumerate_central_srings(g)
    a = data.draw(st.sampled_from(rings))
    x = data.draw(st.sampled_from(a.basic_sets))
    y = data.draw(st.sampled_from(a.basic_sets))
    prod = oracles.convolve(g, oracles.indicator(x), oracles.indicator(y))
    assert sr.is_A_set(a, prod.keys())
    for level in set(prod.values()):
        assert sr.is_A_set(a, [z for z, v in prod.items() if v == level])


def test_enumeration_is_sorted_and_unique():
    rings = sr.enumerate_central_srings(parse_group_spec("E27"))
    keys = [(a.rank, a.key) for a in rings]
    assert len(set(keys)) == len(keys)
    assert [a.rank for a in rings] == sorted(a.rank for a in rings)


@pytest.mark.parametrize(
    "spec,count",
    [("S3", 2), ("Z4", 3), ("Z2", 1), ("D8", 9), ("Q8", 9), ("D18", 5), ("F21", 5),
     ("F20", 5), ("A5", 3), ("Z3xZ3", 40), ("S3xS3", 65), ("E27", 89)],
)
def test_enumeration_counts(spec, count):
    assert len(sr.enumerate_central_srings(parse_group_spec(spec))) == count


@pytest.mark.parametrize("spec", ["S3", "D8", "Q8", "F21", "Z7", "A5", "E27"])
def test_identity_constants(spec):
    for a in sr.enumerate_central_srings(parse_group_spec(spec)):
        inv = a.inverse_index
        for x, b in enumerate(a.basic_sets):
            for y in range(a.rank):
                assert a.constants[x, y, 0] == (len(b) if y == inv[x] else 0)

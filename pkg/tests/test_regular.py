import random
from collections import Counter

import pytest

from hyperop import perm as P
from hyperop.hypermap import OMap, canonical_key, info, is_reflexible, is_regular
from hyperop.regular import (
    BoundExceeded,
    FinGroup,
    GenPair,
    NotGenerating,
    alternating,
    cayley,
    cyclic,
    dihedral,
    enumerate_classes,
    format_class_table,
    generates,
    operation_orbits,
    pair_key,
    parse_group,
    parse_pair,
    symmetric,
    trivial,
)

from _util import random_pair, small_groups

ICOSA = "(2,5,4);(1,2,3,4,5)"  # (g2, g0) of the 5-point icosahedron representation


@pytest.fixture(scope="module")
def a5():
    G = alternating(5)
    return G, enumerate_classes(G, check_reflexible=True)


def test_icosahedron():
    G = alternating(5)
    M = cayley(G, parse_pair(ICOSA, 5))
    mi = info(M)
    assert M.n == 60 and mi.type == (5, 2, 3) and mi.genus == 0
    assert is_regular(M)


def test_cayley_small_cases():
    M = cayley(trivial(), GenPair((0,), (0,)))
    assert M == OMap((0,), (0,))
    C5 = cyclic(5)
    M = cayley(C5, GenPair(C5.gens[0], P.identity(5)))
    mi = info(M)
    assert M.n == 5 and mi.type == (1, 5, 5) and mi.genus == 0


def test_non_generating_pair():
    S3 = symmetric(3)
    t = P.parse_cycles("(1,2)", 3)
    with pytest.raises(NotGenerating):
        cayley(S3, GenPair(t, t))
    assert not generates(S3, GenPair(t, t))


@pytest.mark.parametrize("G,count", [(cyclic(5), 6), (symmetric(3), 3), (dihedral(4), 3), (symmetric(4), 9)])
def test_class_counts(G, count):
    classes = enumerate_classes(G)
    assert len(classes) == count
    sizes = {c.size for c in classes}
    assert len(sizes) == 1
    pairs = sum(1 for g in G.elements() for h in G.elements() if generates(G, GenPair(g, h)))
    assert count * sizes.pop() == pairs


def test_a5_census(a5):
    G, classes = a5
    assert len(classes) == 19
    assert {c.size for c in classes} == {120}
    assert all(c.reflexible for c in classes)
    genus_of = {(2, 3, 5): 0, (2, 5, 5): 4, (3, 3, 5): 5, (3, 5, 5): 9, (5, 5, 5): 13}
    for c in classes:
        assert c.genus == genus_of[tuple(sorted(c.type))]


def test_genus_consistency(a5):
    G, classes = a5
    n = G.order()
    for c in classes:
        o0, o1, o2 = c.type
        assert n // o0 + n // o1 + n // o2 - n == 2 - 2 * c.genus


def test_a5_orbits(a5):
    G, classes = a5
    blocks = operation_orbits(G, classes, ["X", "Y", "T"])
    assert sorted(map(len, blocks)) == [9, 10]
    contents = {frozenset(Counter((tuple(sorted(classes[i].type)), classes[i].genus) for i in b).items())
                for b in blocks}
    o1 = {((2, 5, 5), 4): 3, ((3, 3, 5), 5): 3, ((3, 5, 5), 9): 3}
    o2 = {((2, 3, 5), 0): 6, ((3, 5, 5), 9): 3, ((5, 5, 5), 13): 1}
    assert contents == {frozenset(o1.items()), frozenset(o2.items())}
    # the cyclic permutations of (5,2,5) lie together
    block = next(b for b in blocks if len(b) == 9)
    assert {classes[i].type for i in block} >= {(5, 2, 5), (2, 5, 5), (5, 5, 2)}


def test_empty_op_list(a5):
    G, classes = a5
    assert operation_orbits(G, classes, []) == [[i] for i in range(19)]


def test_reversal_fixes_every_a5_class(a5):
    G, classes = a5
    assert operation_orbits(G, classes, ["-I"]) == [[i] for i in range(19)]


def test_orbits_independent_of_representatives():
    G = symmetric(4)
    classes = enumerate_classes(G)
    rng = random.Random(5)
    swapped = []
    for c in classes:
        # replace the representative by an equivalent pair: conjugate by a random element
        s = rng.choice(G.elements())
        pair = GenPair(P.conjugate(c.pair.g2, s), P.conjugate(c.pair.g0, s))
        assert pair_key(pair) == c.key
        swapped.append(type(c)(c.key, pair, c.type, c.genus, c.size))
    ops = ["X", "Y", "T"]
    assert operation_orbits(G, classes, ops) == operation_orbits(G, swapped, ops)


def test_bucket_keys_match_cayley_keys():
    G = dihedral(5)
    for c in enumerate_classes(G):
        assert canonical_key(cayley(G, c.pair), regular=True) == c.key == canonical_key(cayley(G, c.pair))


def test_threads_do_not_change_output():
    G = symmetric(4)
    assert enumerate_classes(G, threads=4) == enumerate_classes(G, threads=1)


def test_bound():
    with pytest.raises(BoundExceeded):
        enumerate_classes(symmetric(6))
    assert len(enumerate_classes(cyclic(7), bound=7)) == 8


def test_cayley_maps_regular_and_reflexibility_flag():
    rng = random.Random(11)
    for G in small_groups():
        p = random_pair(rng, G)
        M = cayley(G, p)
        assert is_regular(M) and M.n == G.order()
        inv = GenPair(P.inverse(p.g2), P.inverse(p.g0))
        assert is_reflexible(M) == (pair_key(inv) == pair_key(p))


def test_parse_group():
    assert parse_group("A5").order() == 60
    assert parse_group("D6").order() == 12
    G = parse_group('{"degree": 3, "generators": [[2, 3, 1]]}')
    assert isinstance(G, FinGroup) and G.order() == 3
    with pytest.raises(ValueError):
        parse_group('{"degree": 3, "generators": [[1, 1, 2]]}')


def test_class_table():
    text = format_class_table(enumerate_classes(symmetric(3)))
    lines = text.splitlines()
    assert lines[0] == "class\ttype\tgenus\tsize\tpair" and len(lines) == 4

from __future__ import annotations

import pytest

from conftest import group_of, poset_of

from wondermono.orbits import (
    OrbitLabel,
    build_poset,
    closure_leq,
    closure_witnesses,
    dimension,
    schubert_pairs,
    stratum_components,
)


def lab(g, stratum, xword, wword):
    return OrbitLabel(frozenset(stratum), g.from_word(xword), g.from_word(wword))


def a1_labels():
    g = group_of("A1")
    ee = lab(g, (), (), ())
    es = lab(g, (), (), (1,))
    se = lab(g, (), (1,), ())
    ss = lab(g, (), (1,), (1,))
    de = lab(g, (1,), (), ())
    ds = lab(g, (1,), (), (1,))
    return ee, es, se, ss, de, ds


def test_label_validation():
    g = group_of("A2")
    with pytest.raises(ValueError):
        lab(g, (1,), (1,), ())  # x has 1 as a right descent
    with pytest.raises(ValueError):
        lab(g, (3,), (), ())
    h = group_of("A1")
    with pytest.raises(ValueError):
        OrbitLabel(frozenset(), g.identity, h.identity)
    # valid labels are hashable and printable
    z = lab(g, (1, 2), (), (1, 2))
    assert repr(z) == "[{1,2},e,s1 s2]"
    assert hash(z) == hash(lab(g, (1, 2), (), (1, 2)))


def test_census():
    for name, total in [("A1", 6), ("A2", 78), ("B2", 136), ("G2", 300)]:
        g = group_of(name)
        poset = poset_of(name)
        assert len(poset) == total
        formula = sum(len(g.min_coset_reps(I)) * len(g) for I in g.subsets())
        assert total == formula
        assert len(set(poset.labels)) == total


def test_a1_dimensions():
    ee, es, se, ss, de, ds = a1_labels()
    expected = {ee: 1, es: 2, se: 0, ss: 1, de: 2, ds: 3}
    poset = poset_of("A1")
    for z, d in expected.items():
        assert dimension(z) == d
        assert poset.dim(z) == d


def test_a1_full_closure_relation():
    ee, es, se, ss, de, ds = a1_labels()
    downsets = {
        ee: {ee, se},
        es: {ee, es, se, ss},
        se: {se},
        ss: {se, ss},
        de: {ee, se, ss, de},
        ds: {ee, es, se, ss, de, ds},
    }
    poset = poset_of("A1")
    for z2, down in downsets.items():
        for z1 in downsets:
            expected = z1 in down
            assert closure_leq(z1, z2) == expected
            assert poset.leq(z1, z2) == expected
            assert bool(closure_witnesses(z1, z2)) == expected
        assert set(poset.below(z2)) == down


def test_a1_cover_pairs():
    ee, es, se, ss, de, ds = a1_labels()
    poset = poset_of("A1")
    labels = poset.labels
    covers = {(labels[i], labels[j]) for i, j in poset.cover_pairs()}
    assert covers == {
        (ee, se),
        (ss, se),
        (es, ee),
        (es, ss),
        (de, ee),
        (de, ss),
        (ds, es),
        (ds, de),
    }


def test_poset_matches_direct_criterion():
    for name in ["A1", "A2"]:
        poset = poset_of(name)
        for z2 in poset.labels:
            below = set(poset.below(z2))
            for z1 in poset.labels:
                assert closure_leq(z1, z2) == (z1 in below)


def test_witnesses_certify():
    g = group_of("B2")
    poset = poset_of("B2")
    labels = poset.labels
    for z2 in labels[::7]:
        for z1 in labels[::5]:
            pairs = closure_witnesses(z1, z2)
            assert bool(pairs) == poset.leq(z1, z2)
            for u, v in pairs:
                assert set(u.word) <= z1.stratum
                assert set(v.word) <= z2.stratum
                wv = g.multiply(z2.w, v)
                assert wv.length == z2.w.length + v.length
                xvu = g.multiply(g.multiply(z2.x, v), g.inverse(u))
                assert g.bruhat_leq(xvu, z1.x)
                assert g.bruhat_leq(g.multiply(z1.w, u), wv)


def test_dimension_strictly_monotone():
    for name in ["A1", "A2"]:
        poset = poset_of(name)
        for z2 in poset.labels:
            for z1 in poset.below(z2):
                if z1 != z2:
                    assert poset.dim(z1) < poset.dim(z2)


def test_extremes():
    for name in ["A1", "A2", "B2"]:
        g = group_of(name)
        poset = poset_of(name)
        top = poset.maximum
        assert top.stratum == frozenset(range(1, g.rank + 1))
        assert top.x == g.identity and top.w == g.longest
        assert poset.dim(top) == 2 * g.longest.length + g.rank
        bottom = poset.minimum
        assert bottom.stratum == frozenset()
        assert bottom.x == g.longest and bottom.w == g.identity
        assert poset.dim(bottom) == 0


def test_stratum_mask_partition():
    g = group_of("B2")
    poset = poset_of("B2")
    total = 0
    for I in g.subsets():
        mask = poset.stratum_mask(I)
        members = bin(mask).count("1")
        assert members == len(g.min_coset_reps(I)) * len(g)
        total += members
    assert total == len(poset)


def test_stratum_components_a1():
    g = group_of("A1")
    ee, es, se, ss, de, ds = a1_labels()
    assert stratum_components(de, frozenset()) == [ee, ss]
    assert stratum_components(ds, frozenset()) == [es]
    assert stratum_components(ds, frozenset({1})) == [ds]
    with pytest.raises(ValueError):
        stratum_components(ee, frozenset({1}))


def test_stratum_components_maximum_a2():
    g = group_of("A2")
    poset = poset_of("A2")
    top = poset.maximum
    assert stratum_components(top, frozenset()) == [lab(g, (), (), (1, 2, 1))]


def test_stratum_components_match_poset():
    # components are exactly the maximal orbits of the closure sliced to the stratum
    for name in ["A2", "B2"]:
        poset = poset_of(name)
        for z in poset.labels:
            for J in z.group.subsets():
                if not J <= z.stratum:
                    continue
                comps = stratum_components(z, J)
                mask = poset.down_mask(z) & poset.stratum_mask(J)
                assert comps == sorted(poset.maximal_of_mask(mask), key=OrbitLabel.sort_key)


def test_schubert_pairs_a1():
    g = group_of("A1")
    ee, es, se, ss, de, ds = a1_labels()
    e, s1 = g.identity, g.longest
    assert [(p.left, p.right) for p in schubert_pairs(de)] == [(e, s1), (s1, e)]
    assert [(p.left, p.right) for p in schubert_pairs(ds)] == [(s1, s1)]
    assert [(p.left, p.right) for p in schubert_pairs(se)] == [(e, e)]


def test_meet_components_a1():
    ee, es, se, ss, de, ds = a1_labels()
    poset = poset_of("A1")
    assert poset.meet_components(ee, ss) == [se]
    assert poset.meet_components(ee, de) == [ee]
    assert poset.meet_components(es, de) == [ee, ss]


def test_meet_components_are_maximal():
    poset = poset_of("A2")
    labels = poset.labels
    for z1 in labels[::11]:
        for z2 in labels[::13]:
            comps = poset.meet_components(z1, z2)
            both = set(poset.below(z1)) & set(poset.below(z2))
            assert set(comps) <= both
            for z in both:
                assert any(poset.leq(z, c) for c in comps)
            for c in comps:
                for d in comps:
                    if c != d:
                        assert not poset.leq(c, d)


def test_envelope_guard():
    g = group_of("B3")
    with pytest.raises(ValueError, match="7056"):
        build_poset(g)
    # an explicit budget overrides the default envelope
    small = build_poset(group_of("A1"), max_labels=6)
    assert len(small) == 6
    with pytest.raises(ValueError):
        build_poset(group_of("A2"), max_labels=10)

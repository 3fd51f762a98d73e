from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baxtab.errors import DimensionMismatch, GuardExceeded, StartOutsideChamber
from baxtab.series.baxter import baxter_number
from baxtab.tableaux import count_syt_bounded_height
from baxtab.walks import (
    BOUNDARY,
    Chamber,
    CountTable,
    LatticeWalk,
    Model,
    StepRule,
    boundary_counts,
    boundary_index,
    boundary_point,
    count_layers,
    count_walks,
    delta,
    enumerate_walks,
    quadrant_count,
    reflection_count,
)

HES = Model.HESITATING
OSC = Model.OSCILLATING
POS = Model.POSITIVE


def unit(k, i, sign):
    v = [0] * k
    v[i] = sign
    return tuple(v)


def naive_units(model, k):
    """Step units as displacement lists, written out by hand per model."""
    zero = (0,) * k
    plus = [unit(k, i, 1) for i in range(k)]
    minus = [unit(k, i, -1) for i in range(k)]
    if model is OSC:
        return [[s] for s in plus + minus]
    if model is POS:
        return [[s] for s in plus]
    return [[zero, p] for p in plus] + [[m, zero] for m in minus] + [[p, m] for p in plus for m in minus]


def naive_count(model, chamber, start, n, accept):
    ok_pt = (lambda p: all(x > 0 for x in p) and all(a > b for a, b in zip(p, p[1:]))) if chamber is Chamber.W else (
        lambda p: all(x > 0 for x in p)
    )
    total = 0
    for seq in product(naive_units(model, len(start)), repeat=n):
        p = start
        good = True
        for u in seq:
            for s in u:
                p = tuple(a + b for a, b in zip(p, s))
                if not ok_pt(p):
                    good = False
                    break
            if not good:
                break
        total += good and accept(p)
    return total


class TestCountExamples:
    def test_table_one_total(self):
        assert count_walks(StepRule(HES, 2), Chamber.W, (2, 1), 2, BOUNDARY) == 6

    def test_ballot_paths(self):
        assert count_walks(StepRule(OSC, 1), Chamber.W, (1,), 6, BOUNDARY) == 20

    def test_hesitating_w1_return_n5(self):
        # exhaustive enumeration gives the Motzkin number 21 here
        assert count_walks(StepRule(HES, 1), Chamber.W, (1,), 5, (1,)) == 21
        assert len(enumerate_walks(StepRule(HES, 1), Chamber.W, (1,), 5, (1,))) == 21

    def test_bad_start(self):
        with pytest.raises(StartOutsideChamber):
            count_walks(StepRule(HES, 2), Chamber.W, (1, 2), 1)

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            count_walks(StepRule(HES, 2), Chamber.W, (3, 2, 1), 1)
        with pytest.raises(DimensionMismatch):
            count_walks(StepRule(HES, 2), Chamber.W, (2, 1), 1, (3, 2, 1))


class TestAgainstNaive:
    @pytest.mark.parametrize(
        "model, k, n",
        [(HES, 1, 5), (HES, 2, 4), (HES, 3, 3), (OSC, 1, 8), (OSC, 2, 7), (OSC, 3, 5), (POS, 2, 7), (POS, 3, 6)],
    )
    @pytest.mark.parametrize("chamber", [Chamber.W, Chamber.Q])
    def test_anywhere_and_boundary(self, model, k, n, chamber):
        start = delta(k)
        rule = StepRule(model, k)
        assert count_walks(rule, chamber, start, n, None) == naive_count(model, chamber, start, n, lambda p: True)
        assert count_walks(rule, chamber, start, n, BOUNDARY) == naive_count(
            model, chamber, start, n, lambda p: boundary_index(p) is not None
        )


class TestEnumerate:
    def test_one_pair_boundary(self):
        walks = enumerate_walks(StepRule(HES, 2), Chamber.W, (2, 1), 1, BOUNDARY)
        assert sorted(w.steps for w in walks) == [(0, 1), (1, -1)]

    def test_unique_return(self):
        walks = enumerate_walks(StepRule(OSC, 1), Chamber.W, (1,), 2, (1,))
        assert [w.steps for w in walks] == [(1, -1)]

    def test_positive_anywhere(self):
        walks = enumerate_walks(StepRule(POS, 2), Chamber.W, (2, 1), 2, None)
        assert sorted(w.steps for w in walks) == [(1, 1), (1, 2)]

    @pytest.mark.parametrize("model, k, n", [(HES, 2, 4), (OSC, 3, 6), (POS, 3, 6)])
    def test_matches_dp_and_valid(self, model, k, n):
        rule = StepRule(model, k)
        walks = enumerate_walks(rule, Chamber.W, delta(k), n, None)
        assert len(walks) == len(set(walks)) == count_walks(rule, Chamber.W, delta(k), n, None)
        assert all(w.is_valid() for w in walks)

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            enumerate_walks(StepRule(HES, 2), Chamber.W, (2, 1), 9)
        with pytest.raises(GuardExceeded):
            enumerate_walks(StepRule(OSC, 2), Chamber.W, (2, 1), 13)

    def test_json_round_trip(self):
        w = LatticeWalk(HES, (2, 1), (0, 1, 1, -1))
        assert LatticeWalk.from_json(w.to_json()) == w
        assert LatticeWalk.from_json({"model": "hesitating", "points": [list(p) for p in w.points()]}) == w


class TestReflection:
    def test_example(self):
        assert reflection_count(2, (2, 1), (3, 1), 1) == 1
        assert count_walks(StepRule(HES, 2), Chamber.W, (2, 1), 1, (3, 1)) == 1

    def test_empty_walk(self):
        assert reflection_count(2, (2, 1), (2, 1), 0) == 1

    def test_quadrant_trivial(self):
        assert quadrant_count(2, (2, 1), (1, 2), 0) == 0
        assert quadrant_count(2, (2, 1), (2, 1), 0) == 1

    def test_quadrant_one_pair(self):
        assert quadrant_count(2, (2, 1), (2, 1), 1) == naive_count(HES, Chamber.Q, (2, 1), 1, lambda p: p == (2, 1))

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("n", range(0, 6))
    def test_equals_chamber_dp_pointwise(self, k, n):
        rule = StepRule(HES, k)
        layer = count_layers(rule, Chamber.W, delta(k), n)[-1]
        for mu, c in layer.items():
            assert reflection_count(k, delta(k), mu, n) == c

    @pytest.mark.parametrize("m", range(0, 6))
    @pytest.mark.parametrize("n", range(0, 8))
    def test_k1_single_term(self, m, n):
        assert reflection_count(1, (1,), (m + 1,), n) == count_walks(StepRule(HES, 1), Chamber.W, (1,), n, (m + 1,))


class TestIdentities:
    def test_baxter(self):
        rule = StepRule(HES, 2)
        for n in range(13):
            assert sum(boundary_counts(rule, (2, 1), n).values()) == baxter_number(n + 1)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_positive_walks_are_syt(self, k):
        rule = StepRule(POS, 2 * k)
        for n in range(15):
            assert count_walks(rule, Chamber.W, delta(2 * k), n, None) == count_syt_bounded_height(n, 2 * k)


def test_boundary_point():
    assert boundary_point(3, 2) == (5, 2, 1)
    assert boundary_index((5, 2, 1)) == 2
    assert boundary_index((5, 3, 1)) is None


def test_count_table_csv():
    text = CountTable.build(StepRule(HES, 2), Chamber.W, (2, 1), 1).to_csv()
    lines = text.splitlines()
    assert lines[0] == "k,model,n,endpoint,count"
    assert "2,hesitating,0,2;1,1" in lines
    assert sum(int(l.split(",")[-1]) for l in lines[1:] if l.split(",")[2] == "1") == count_walks(
        StepRule(HES, 2), Chamber.W, (2, 1), 1, None
    )


@settings(max_examples=40, deadline=None)
@given(model=st.sampled_from([HES, OSC, POS]), k=st.integers(1, 3), n=st.integers(0, 5))
def test_boundary_le_anywhere(model, k, n):
    rule = StepRule(model, k)
    w = count_walks(rule, Chamber.W, delta(k), n, BOUNDARY)
    q = count_walks(rule, Chamber.Q, delta(k), n, BOUNDARY)
    a = count_walks(rule, Chamber.W, delta(k), n, None)
    assert 0 <= w <= a
    assert w <= q

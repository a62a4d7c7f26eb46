import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from randlinks.braid import BraidWord, closure_components, closure_partition, project
from randlinks.partition import Partition
from randlinks.perm import compose, identity, num_cycles, transposition


@st.composite
def words(draw, n=None):
    if n is None:
        n = draw(st.integers(2, 8))
    letters = draw(st.lists(st.integers(-(n - 1), n - 1), max_size=40))
    return BraidWord(n, tuple(letters))


def test_project_empty_is_identity():
    assert project(BraidWord(4)) == identity(4)


def test_project_single_generator():
    assert project(BraidWord(3, (1,))) == transposition(3, 0, 1)


def test_project_two_generators_is_three_cycle():
    assert num_cycles(project(BraidWord(3, (1, 2)))) == 1


@pytest.mark.parametrize("n, word, expected", [(5, (), 5), (5, (1, 2, 3, 4), 1), (3, (1, -1), 3)])
def test_closure_components(n, word, expected):
    assert closure_components(BraidWord(n, word)) == expected


@pytest.mark.parametrize("word, expected", [((), (1, 1, 1)), ((1,), (2, 1)), ((1, 2), (3,))])
def test_closure_partition(word, expected):
    assert closure_partition(BraidWord(3, word)) == Partition(expected)


@pytest.mark.parametrize("letter", [3, -3, 7])
def test_out_of_range_letter_rejected(letter):
    with pytest.raises(ValueError):
        BraidWord(3, (1, letter))


def test_single_strand_rejected():
    with pytest.raises(ValueError):
        BraidWord(1)


@given(st.integers(2, 8).flatmap(lambda n: st.tuples(words(n), words(n))))
def test_project_is_homomorphism(pair):
    u, v = pair
    assert project(u + v) == compose(project(u), project(v))


@pytest.mark.parametrize("n", range(2, 9))
def test_sign_is_invisible(n):
    for i in range(1, n):
        assert project(BraidWord(n, (i,))) == project(BraidWord(n, (-i,)))


@given(words())
def test_component_bounds(w):
    c = closure_components(w)
    assert 1 <= c <= w.n
    assert len(closure_partition(w)) == c


def test_lazy_steps_keep_length():
    w = BraidWord(4, (0, 1, 0, -3))
    assert len(w) == 4
    assert project(w) == project(BraidWord(4, (1, -3)))


def test_json_round_trip():
    w = BraidWord(4, (1, -2, 0, 3))
    obj = w.to_json()
    assert obj == {"n": 4, "word": [1, -2, 0, 3]}
    assert BraidWord.from_json(json.dumps(obj)) == w
    assert BraidWord.from_json(obj) == w


def test_random_words_agree_with_brute_force_orbits():
    from oracles import orbit_count

    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 12)
        letters = [rng.randint(-(n - 1), n - 1) for _ in range(rng.randint(0, 60))]
        # apply transpositions to positions directly, right factor first
        images = list(range(n))
        for x in letters:
            if x:
                step = list(range(n))
                step[abs(x) - 1], step[abs(x)] = abs(x), abs(x) - 1
                images = [images[step[i]] for i in range(n)]
        assert closure_components(BraidWord(n, tuple(letters))) == orbit_count(images)

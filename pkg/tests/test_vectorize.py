from types import SimpleNamespace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ewom.keywords import KeywordReport, KeywordScore
from ewom.vectorize import FeatureMode, FeatureSpace, SparseVector, build_space, vectorize, vectorize_tokens


def report(pos, neg, other=()):
    scores = [KeywordScore(w, 1.0, 0.0, True, False) for w in pos]
    scores += [KeywordScore(w, 0.0, 1.0, False, True) for w in neg]
    scores += [KeywordScore(w, 1.0, 1.0, False, False) for w in other]
    scores.sort(key=lambda s: s.word)
    return KeywordReport(tuple(scores), 1.5, 1.5)


SPACE = FeatureSpace(("面白い", "つまらない"))


def test_build_space_two_keywords():
    space = build_space(report(["面白い"], ["つまらない"], ["ゲーム"]))
    assert set(space.features) == {"面白い", "つまらない"}
    assert len(space) == 2


def test_build_space_keeps_report_order():
    space = build_space(report([f"p{k}" for k in range(5)], [f"n{k}" for k in range(3)], ["x"]))
    assert len(space) == 8
    assert list(space.features) == sorted(space.features)


def test_build_space_empty():
    with pytest.raises(ValueError, match="empty feature space"):
        build_space(report([], [], ["ゲーム"]))


def test_binary_mode():
    assert vectorize_tokens(["面白い", "面白い"], SPACE).to_dict() == {0: 1.0}


def test_count_mode():
    space = FeatureSpace(SPACE.features, FeatureMode.COUNT)
    assert vectorize_tokens(["面白い", "面白い"], space).to_dict() == {0: 2.0}


def test_no_features_present():
    assert vectorize_tokens(["ゲーム"], SPACE) == SparseVector()


def test_vectorize_document():
    doc = SimpleNamespace(tokens=["つまらない", "面白い"])
    assert vectorize(doc, SPACE) == SparseVector((0, 1), (1.0, 1.0))


def test_duplicate_features_rejected():
    with pytest.raises(ValueError):
        FeatureSpace(("a", "a"))


@pytest.mark.parametrize(
    "indices, values",
    [((1, 0), (1, 1)), ((0, 0), (1, 1)), ((0,), (0,)), ((0,), (-1,)), ((0, 1), (1,)), ((-1,), (1,))],
)
def test_sparse_vector_invariants(indices, values):
    with pytest.raises(ValueError):
        SparseVector(indices, values)


def test_feature_mode_parse():
    assert FeatureMode.parse("count") is FeatureMode.COUNT
    with pytest.raises(ValueError):
        FeatureMode.parse("tfidf")


features = ("a", "b", "c", "d")
token_lists = st.lists(st.sampled_from(["a", "b", "c", "d", "x", "y", "z"]), max_size=30)


@given(token_lists)
def test_count_mode_matches_brute_force(tokens):
    space = FeatureSpace(features, FeatureMode.COUNT)
    got = vectorize_tokens(tokens, space).to_dict()
    for k, f in enumerate(features):
        assert got.get(k, 0) == sum(1 for t in tokens if t == f)


@given(token_lists)
def test_binary_values_are_one(tokens):
    v = vectorize_tokens(tokens, FeatureSpace(features))
    assert all(x == 1.0 for x in v.values)
    assert set(v.indices) == {features.index(t) for t in tokens if t in features}


@given(token_lists, st.randoms())
def test_non_feature_permutation_is_irrelevant(tokens, rnd):
    shuffled = list(tokens)
    rnd.shuffle(shuffled)
    space = FeatureSpace(features, FeatureMode.COUNT)
    assert vectorize_tokens(tokens, space) == vectorize_tokens(shuffled, space)

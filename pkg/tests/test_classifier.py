import os
import random
import tempfile

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ewom.classifier import (
    DECISION_SIGN,
    LabeledSample,
    LinearModel,
    ModelFormatError,
    ModelMismatchError,
    TrainConfig,
    classify,
    decision,
    load_model,
    save_model,
    train,
    training_errors,
)
from ewom.vectorize import FeatureMode, FeatureSpace, SparseVector
from oracles import dense_dot, separable_2d


def space(n):
    return FeatureSpace(tuple(f"f{k}" for k in range(n)))


def vec(d):
    return SparseVector.from_dict(d)


def points_to_samples(points, labels):
    return [LabeledSample(vec({0: x, 1: y}), lab) for (x, y), lab in zip(points, labels)]


# decision / classify

def test_decision_dot_product():
    model = LinearModel([1, -1], 0.5, space(2))
    assert decision(model, vec({0: 1, 1: 2})) == -0.5


def test_zero_model_decides_zero():
    model = LinearModel.zeros(space(3))
    assert decision(model, vec({0: 1, 2: 4})) == 0


def test_decision_out_of_bounds():
    with pytest.raises(ModelMismatchError, match="feature/model mismatch"):
        decision(LinearModel.zeros(space(2)), vec({2: 1}))


def test_decision_matches_dense_oracle():
    rng = random.Random(3)
    for _ in range(20):
        weights = [rng.uniform(-5, 5) for _ in range(50)]
        bias = rng.uniform(-1, 1)
        x = {k: rng.uniform(0.1, 3) for k in rng.sample(range(50), 12)}
        model = LinearModel(weights, bias, space(50))
        assert abs(decision(model, vec(x)) - dense_dot(weights, x, bias)) <= 1e-12


@pytest.mark.parametrize("bias, expected", [(-0.5, -1), (0.0, 1), (3.2, 1)])
def test_classify_sign(bias, expected):
    model = LinearModel([0.0], bias, space(1))
    assert classify(model, SparseVector()) == expected


def test_weight_count_must_match_space():
    with pytest.raises(ModelMismatchError):
        LinearModel([1.0], 0.0, space(2))


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        LinearModel([float("nan")], 0.0, space(1))


# train

def test_correct_at_start_no_update():
    result = train([LabeledSample(vec({0: 1}), 1)], space(1), TrainConfig(learning_rate=0.5))
    assert result.model.weights == [0.0] and result.model.bias == 0.0
    assert result.updates == 0


def test_single_negative_sample_update():
    eta = 0.5
    result = train([LabeledSample(vec({0: 1}), -1)], space(1), TrainConfig(learning_rate=eta, epochs=1))
    assert result.model.weights == [-eta]
    assert result.model.bias == -eta
    assert result.updates == 1


def test_two_point_separable_converges():
    samples = [LabeledSample(vec({0: 1}), 1), LabeledSample(vec({1: 1}), -1)]
    result = train(samples, space(2), TrainConfig(learning_rate=1, epochs=10))
    assert training_errors(result.model, samples) == 0


def test_no_training_data():
    with pytest.raises(ValueError, match="no training data"):
        train([], space(1))


def test_sample_outside_space():
    with pytest.raises(ModelMismatchError):
        train([LabeledSample(vec({4: 1}), 1)], space(2))


def test_label_must_be_plus_minus_one():
    with pytest.raises(ValueError):
        LabeledSample(vec({0: 1}), 0)


@pytest.mark.parametrize("kwargs", [{"learning_rate": 0}, {"epochs": 0}, {"max_updates": 0}, {"update_rule": "x"}])
def test_bad_train_config(kwargs):
    with pytest.raises(ValueError):
        TrainConfig(**kwargs)


def test_max_updates_caps_training():
    rng = random.Random(0)
    pts, labels = separable_2d(rng)
    result = train(points_to_samples(pts, labels), space(2), TrainConfig(epochs=50, max_updates=3))
    assert result.updates == 3


def test_single_label_warns(caplog):
    train([LabeledSample(vec({0: 1}), 1)], space(1))
    assert "only label" in caplog.text


def test_decision_sign_rule_moves_away_from_label():
    # mistake on y=-1 with f=0: the decision-sign step pushes further toward +1
    result = train(
        [LabeledSample(vec({0: 1}), -1)], space(1), TrainConfig(epochs=3, update_rule=DECISION_SIGN)
    )
    assert result.model.weights == [3.0] and result.model.bias == 3.0
    assert result.last_epoch_errors == 1


samples_strategy = st.lists(
    st.tuples(
        st.dictionaries(st.integers(0, 4), st.floats(0.1, 5), min_size=1, max_size=5),
        st.sampled_from([1, -1]),
    ),
    min_size=1,
    max_size=30,
)


@given(samples_strategy, st.integers(0, 2**63 - 1))
def test_training_is_deterministic(raw, seed):
    samples = [LabeledSample(vec(d), y) for d, y in raw]
    cfg = TrainConfig(epochs=5, shuffle_seed=seed)
    a, b = train(samples, space(5), cfg), train(samples, space(5), cfg)
    assert a.model == b.model and a.updates == b.updates


@given(samples_strategy, st.floats(0.01, 3))
def test_update_margin_increase(raw, eta):
    d, y = raw[0]
    x = vec(d)
    model = LinearModel([0.3, -0.2, 0.0, 1.0, -1.5], 0.1, space(5))
    before = y * decision(model, x)
    for k, v in zip(x.indices, x.values):
        model.weights[k] += eta * y * v
    model.bias += eta * y
    after = y * decision(model, x)
    assert after - before == pytest.approx(eta * (x.squared_norm() + 1), rel=1e-9, abs=1e-9)


def test_training_update_matches_margin_law():
    # a single first-epoch update from zero must add eta*(|x|^2+1) to y*f(x)
    x = vec({0: 2.0, 2: 0.5})
    result = train([LabeledSample(x, -1)], space(3), TrainConfig(learning_rate=0.25, epochs=1))
    assert -decision(result.model, x) == pytest.approx(0.25 * (4.0 + 0.25 + 1))


@given(st.integers(0, 10_000))
def test_fixed_point_when_no_errors(seed):
    rng = random.Random(seed)
    pts, labels = separable_2d(rng, n=20)
    samples = points_to_samples(pts, labels)
    result = train(samples, space(2), TrainConfig(epochs=200, shuffle_seed=seed))
    assert training_errors(result.model, samples) == 0
    again = train(samples, space(2), TrainConfig(epochs=5, shuffle_seed=seed + 1), init=result.model)
    assert again.updates == 0
    assert again.model == result.model


def test_init_space_must_match():
    with pytest.raises(ModelMismatchError):
        train([LabeledSample(vec({0: 1}), 1)], space(1), init=LinearModel.zeros(space(2)))


# model files

def test_round_trip(tmp_path):
    model = LinearModel([0.1, -2.5e-17, 3.0], 1 / 3, FeatureSpace(("面白い", "つまらない", "x"), FeatureMode.COUNT))
    path = tmp_path / "m.txt"
    save_model(model, path)
    loaded = load_model(path)
    assert loaded == model
    assert path.read_text(encoding="utf-8").splitlines()[:3] == [
        "ewom-model v1",
        "mode Count",
        "bias 0.33333333333333331",
    ]


@given(st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=1, max_size=8), st.floats(-10, 10))
def test_round_trip_bit_exact(weights, bias):
    model = LinearModel(weights, bias, space(len(weights)))
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "m.txt")
        save_model(model, path)
        loaded = load_model(path)
    assert loaded.weights == model.weights and loaded.bias == model.bias
    x = vec({k: 1.0 + k for k in range(len(weights))})
    assert decision(loaded, x) == decision(model, x)


@pytest.mark.parametrize(
    "content, match",
    [
        ("ewom-model v9\nmode Binary\nbias 0\n0\ta\t1\n", "version"),
        ("", "version"),
        ("ewom-model v1\nmode Binary\n", "truncated"),
        ("ewom-model v1\nkind Binary\nbias 0\n0\ta\t1\n", "mode"),
        ("ewom-model v1\nmode Binary\nbias zero\n0\ta\t1\n", "could not convert"),
        ("ewom-model v1\nmode Binary\nbias 0\n0\ta\n", "expected index"),
        ("ewom-model v1\nmode Binary\nbias 0\n0\ta\t1\n2\tb\t1\n", "out of order"),
        ("ewom-model v1\nmode Binary\nbias 0\n0\ta\tx\n", "bad number"),
        ("ewom-model v1\nmode Binary\nbias 0\n", "no features"),
        ("ewom-model v1\nmode Binary\nbias 0\n0\ta\t1\n1\ta\t2\n", "duplicate"),
    ],
)
def test_load_errors(tmp_path, content, match):
    path = tmp_path / "m.txt"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ModelFormatError, match=match):
        load_model(path)

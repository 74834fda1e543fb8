import numpy as np
import pytest

from fuzzytwin.dataset import generate_crossplane
from fuzzytwin.kernel import KernelSpec
from fuzzytwin.models import MODEL_IDS, TwinSVMClassifier, train
from fuzzytwin.solver import SolverParams


@pytest.mark.parametrize("model_id", MODEL_IDS)
def test_train_every_model(model_id):
    d = generate_crossplane(20, 10, 0.05, 0)
    for spec in (KernelSpec("linear"), KernelSpec("gaussian", 0.5)):
        m = train(model_id, d, SolverParams(0.1, 0.1, 0.01, 0.01, 0.8, 0.8), spec)
        assert m.rule == ("perpendicular" if model_id == "lstsvm" else "ratio")
        assert m.predict(d.features).shape == (30,)


def test_unknown_model():
    with pytest.raises(ValueError):
        train("svm", generate_crossplane(5, 5, 0, 0))


def test_classifier_maps_arbitrary_labels():
    d = generate_crossplane(30, 10, 0.0, 0)
    y = np.where(d.labels == 1, "common", "rare")
    clf = TwinSVMClassifier(model="f_relstsvm", c1=1e-5, c2=1e-5, c3=1e-5, c4=1e-5, e1=0.8, e2=0.8)
    clf.fit(d.features, y)
    assert list(clf.classes_) == ["common", "rare"]
    test = generate_crossplane(30, 30, 0.0, 5)
    y_test = np.where(test.labels == 1, "common", "rare")
    np.testing.assert_array_equal(clf.predict(test.features), y_test)
    assert clf.score(test.features, y_test) == 1.0

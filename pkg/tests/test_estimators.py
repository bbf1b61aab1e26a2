import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from secondtype.estimators import CuspidalClassifier, FoliationClassifier
from secondtype.formparse import parse_poly
from secondtype.reduction import Dicritical

from conftest import TANGENT_SN, THREE_LINES

SQRT2 = "b: b^2 - 2 ~ 1.414"


def test_foliation_classifier_rows():
    est = FoliationClassifier(algebraics=[SQRT2]).fit([TANGENT_SN, THREE_LINES])
    rows = est.transform([TANGENT_SN, THREE_LINES])
    assert rows.tolist() == [[2, 1, 1, 1, 0, 0], [2, 1, 1, 0, 0, 1]]
    assert est.predict([TANGENT_SN, THREE_LINES]).tolist() == [False, True]
    assert est.score([TANGENT_SN, THREE_LINES], [False, True]) == 1.0


def test_params_and_clone():
    est = FoliationClassifier(max_depth=7)
    assert est.get_params() == {"max_depth": 7, "algebraics": ()}
    assert clone(est).set_params(max_depth=3).max_depth == 3


def test_not_fitted_and_validation():
    with pytest.raises(NotFittedError):
        FoliationClassifier().predict([TANGENT_SN])
    with pytest.raises(ValueError):
        FoliationClassifier(max_depth=0).fit([TANGENT_SN])
    with pytest.raises(TypeError):
        FoliationClassifier().fit(TANGENT_SN)
    with pytest.raises(TypeError):
        FoliationClassifier().fit([3])
    with pytest.raises(ValueError):
        FoliationClassifier().fit([])


def test_dicritical_rows():
    est = FoliationClassifier().fit(["x dy - y dx"])
    assert est.transform(["x dy - y dx"]).tolist() == [[-1] * 6]
    with pytest.raises(Dicritical):
        est.predict(["x dy - y dx"])


def test_cuspidal_classifier():
    X = [(6, 3, "x*y"), (2, 3, "y"), (3, 2, parse_poly("0"))]
    est = CuspidalClassifier().fit(X)
    T = est.transform(X)
    assert T.shape == (3, 4)
    assert T[0, :3].tolist() == [10.0, 9.0, 3.0] and np.isnan(T[0, 3])
    assert np.isinf(T[2, 1])
    assert est.predict(X).tolist() == [True, True, True]
    oracle = CuspidalClassifier(use_reduction_oracle=True).fit(X[:1])
    assert oracle.transform(X[:1])[0, 3] == 1.0
    with pytest.raises(TypeError):
        CuspidalClassifier().fit([(6, 3)])


def test_in_pipeline():
    pipe = make_pipeline(FoliationClassifier())
    assert pipe.fit([TANGENT_SN]).predict([TANGENT_SN]).tolist() == [False]

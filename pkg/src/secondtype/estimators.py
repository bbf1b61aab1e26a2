"""scikit-learn style wrappers.

Nothing is learned: ``fit`` only validates parameters, so the estimators
can sit in pipelines and grid searches next to ordinary models.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .cuspidal import classify_cuspidal
from .foliation import multiplicity
from .polyring import INF
from .reduction import DEFAULT_MAX_DEPTH, Dicritical, reduce, verdict
from .validation import check_context, check_forms, check_max_depth, check_specs


class FoliationClassifier(ClassifierMixin, TransformerMixin, BaseEstimator):
    """Second-type verdict for each form, by full reduction of singularities.

    ``transform`` returns one row per form: multiplicity, blow-ups,
    saddle-nodes, tangent saddle-nodes, generalized curve, second type.
    Dicritical forms get -1 in every column and ``predict`` raises.
    """

    def __init__(self, max_depth=DEFAULT_MAX_DEPTH, algebraics=()):
        self.max_depth = max_depth
        self.algebraics = algebraics

    def fit(self, X, y=None):
        check_max_depth(self.max_depth)
        self.context_ = check_context(self.algebraics)
        check_forms(X, self.context_)
        self.classes_ = np.array([False, True])
        return self

    def _trees(self, X):
        check_is_fitted(self, "context_")
        return [reduce(w, self.max_depth) for w in check_forms(X, self.context_)]

    def transform(self, X):
        rows = []
        for tree in self._trees(X):
            if tree.dicritical:
                rows.append([-1] * 6)
                continue
            v = verdict(tree)
            sn = tree.saddle_nodes()
            rows.append([
                multiplicity(tree.root),
                tree.blowup_count,
                len(sn),
                sum(s.saddle_node_tangency == "Tangent" for s in sn),
                int(v.generalized_curve),
                int(v.second_type),
            ])
        return np.array(rows, dtype=np.int64)

    def predict(self, X):
        out = []
        for tree in self._trees(X):
            if tree.dicritical:
                raise Dicritical(tree.dicritical_at)
            out.append(verdict(tree).second_type)
        return np.array(out, dtype=bool)


class CuspidalClassifier(ClassifierMixin, TransformerMixin, BaseEstimator):
    """Verdicts for the cuspidal family from (p, q, delta) triples.

    ``transform`` yields ph, intersection (inf for delta = 0), gcd(p, q) and
    the generalized-curve flag (nan when the criterion is silent).
    """

    def __init__(self, use_reduction_oracle=False, max_depth=DEFAULT_MAX_DEPTH, algebraics=()):
        self.use_reduction_oracle = use_reduction_oracle
        self.max_depth = max_depth
        self.algebraics = algebraics

    def fit(self, X, y=None):
        check_max_depth(self.max_depth)
        self.context_ = check_context(self.algebraics)
        check_specs(X, self.context_)
        self.classes_ = np.array([False, True])
        return self

    def _verdicts(self, X):
        check_is_fitted(self, "context_")
        return [(s, classify_cuspidal(s, self.use_reduction_oracle, self.max_depth))
                for s in check_specs(X, self.context_)]

    def transform(self, X):
        rows = []
        for spec, v in self._verdicts(X):
            inter = np.inf if v.intersection == INF else float(v.intersection)
            gc = np.nan if v.generalized_curve is None else float(v.generalized_curve)
            rows.append([float(v.ph), inter, float(spec.d), gc])
        return np.array(rows, dtype=float)

    def predict(self, X):
        return np.array([v.second_type for _, v in self._verdicts(X)], dtype=bool)

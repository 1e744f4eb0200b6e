"""Estimator-style wrappers so the reducers and solver compose with
sklearn pipelines and parameter tooling (get_params/set_params/clone).

These are thin shells over the functional API. Arrays of arbitrary Python
ints are accepted; floats are rejected because everything downstream is
exact. Like sklearn's stateless preprocessors, transform() works without a
prior fit(); fitting additionally records the run's report attributes
(trailing-underscore convention).
"""

from fractions import Fraction
from typing import Optional

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .basis import Basis
from .errors import ParameterError
from .reduction import ReductionParams, bkz, lll
from .solver import Budget, enumerate_svp


def check_basis(X) -> Basis:
    """Validate array-like input as a full-rank integer basis."""
    if isinstance(X, Basis):
        return X
    if isinstance(X, np.ndarray):
        if X.ndim != 2:
            raise ParameterError(f"expected a 2d array, got ndim={X.ndim}")
        if X.dtype.kind == "f" or X.dtype.kind == "c":
            raise ParameterError("basis entries must be exact integers, not floats")
        X = X.tolist()
    rows = []
    for row in X:
        out = []
        for x in row:
            if isinstance(x, bool) or isinstance(x, float):
                raise ParameterError(f"basis entries must be ints, got {type(x).__name__}")
            if isinstance(x, np.integer):
                x = int(x)
            out.append(x)
        rows.append(out)
    return Basis.from_rows(rows)


class LLLReducer(TransformerMixin, BaseEstimator):
    """Basis-to-basis transformer running exact LLL reduction.

    Parameters
    ----------
    delta : Fraction, the Lovasz parameter in (1/4, 1).

    Attributes set by fit: basis_, report_, n_swaps_, status_.
    """

    def __init__(self, delta: Fraction = Fraction(99, 100)):
        self.delta = delta

    def _params(self) -> ReductionParams:
        return ReductionParams(delta=Fraction(self.delta))

    def fit(self, X, y=None):
        report = lll(check_basis(X), self._params())
        self.report_ = report
        self.basis_ = report.basis
        self.n_swaps_ = report.swaps
        self.status_ = report.status
        return self

    def transform(self, X):
        return lll(check_basis(X), self._params()).basis.row_lists()

    def fit_transform(self, X, y=None):
        return self.fit(X).basis_.row_lists()


class BKZReducer(TransformerMixin, BaseEstimator):
    """Block reduction transformer; beta = n solves SVP exactly."""

    def __init__(self, beta: int = 2, delta: Fraction = Fraction(99, 100), max_rounds: int = 64):
        self.beta = beta
        self.delta = delta
        self.max_rounds = max_rounds

    def _params(self) -> ReductionParams:
        return ReductionParams(delta=Fraction(self.delta), beta=self.beta, max_rounds=self.max_rounds)

    def fit(self, X, y=None):
        report = bkz(check_basis(X), self._params())
        self.report_ = report
        self.basis_ = report.basis
        self.n_swaps_ = report.swaps
        self.n_rounds_ = report.rounds
        self.status_ = report.status
        return self

    def transform(self, X):
        return bkz(check_basis(X), self._params()).basis.row_lists()

    def fit_transform(self, X, y=None):
        return self.fit(X).basis_.row_lists()


class SvpSolver(BaseEstimator):
    """Exact shortest-vector solver (fit computes, attributes hold results).

    Attributes set by fit: vector_, norm_sq_, nodes_, status_, result_.
    """

    def __init__(self, budget_s: float = 3600.0, node_cap: Optional[int] = None):
        self.budget_s = budget_s
        self.node_cap = node_cap

    def fit(self, X, y=None):
        result = self.solve(X)
        self.result_ = result
        self.vector_ = result.vector
        self.norm_sq_ = result.norm_sq
        self.nodes_ = result.nodes
        self.status_ = result.status
        return self

    def solve(self, X):
        return enumerate_svp(check_basis(X), Budget(wall_time_s=self.budget_s, node_cap=self.node_cap))

"""Input validation helpers shared by all estimators."""

from __future__ import annotations

import numpy as np
from sklearn.exceptions import NotFittedError

from .errors import DomainError, InputError


def check_feature_matrix(X, n_features: int | None = None) -> np.ndarray:
    """Coerce X to a finite 2-D float array, optionally checking width."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X.reshape(1, -1)
    if X.ndim != 2:
        raise InputError(f"feature matrix must be 2-D, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise InputError("feature matrix contains non-finite values")
    if n_features is not None and X.shape[1] != n_features:
        raise InputError(
            f"feature width mismatch: model expects {n_features}, got {X.shape[1]}"
        )
    return X


def check_training_data(X, y) -> tuple[np.ndarray, np.ndarray]:
    """Validate a training pair: matching lengths, finite, non-empty."""
    X = check_feature_matrix(X)
    y = np.asarray(y, dtype=float).ravel()
    if len(y) != X.shape[0]:
        raise InputError(f"X has {X.shape[0]} rows but y has {len(y)} values")
    if len(y) == 0:
        raise DomainError("empty training set")
    if not np.all(np.isfinite(y)):
        raise InputError("targets contain non-finite values")
    return X, y


def check_fitted(estimator, attribute: str) -> None:
    if getattr(estimator, attribute, None) is None:
        raise NotFittedError(
            f"{type(estimator).__name__} is not fitted yet; call fit() first"
        )

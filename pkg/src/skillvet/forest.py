"""Random-forest classifier for utterance-intent classification.

A small, dependency-free CART forest: bootstrap-sampled trees, Gini
impurity, a random feature subset at every split, grown until leaves
are pure or the minimum leaf size blocks further splitting.  Everything
is deterministic given the seed; tree *t* uses its own generator seeded
with ``seed + t``, so trees could be built in any order (or in
parallel) and the forest would come out identical.

Ties, both in a leaf's class counts and in the forest vote, break
toward the class that sorts first.  The detector orders its labels so
that the conservative "no-switch" label wins ties.

Forests serialize to a versioned JSON document embedding the
hyperparameters, seed, and class names, so a saved model is
self-describing and reloadable anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

FORMAT_VERSION = 1


@dataclass(frozen=True)
class ForestParams:
    n_trees: int = 100
    max_features: Optional[int] = None  # None: ceil(sqrt(n_features))
    min_leaf: int = 2

    def validate(self, n_features: int) -> int:
        """Check bounds and return the effective max_features."""
        if self.n_trees < 1:
            raise ValueError("n_trees must be >= 1")
        if self.min_leaf < 1:
            raise ValueError("min_leaf must be >= 1")
        if self.max_features is None:
            effective = int(np.ceil(np.sqrt(n_features)))
        else:
            effective = self.max_features
        if not 1 <= effective <= n_features:
            raise ValueError(
                f"max_features must be in [1, {n_features}], got {effective}"
            )
        return effective


def _gini_by_split(left: np.ndarray, total: np.ndarray, sizes: np.ndarray) -> np.ndarray:
    """Weighted Gini impurity for each candidate left-side class-count row."""
    n = total.sum()
    right = total[None, :] - left
    right_sizes = n - sizes
    gini_left = 1.0 - ((left / sizes[:, None]) ** 2).sum(axis=1)
    gini_right = 1.0 - ((right / right_sizes[:, None]) ** 2).sum(axis=1)
    return (sizes * gini_left + right_sizes * gini_right) / n


def _best_split(
    x: np.ndarray,
    y: np.ndarray,
    n_classes: int,
    features: np.ndarray,
    min_leaf: int,
):
    """Lowest-impurity (feature, threshold) over the given features.

    Ties keep the first candidate in feature order, then position order,
    so results depend only on the drawn feature sequence.
    """
    n = len(y)
    best = None
    onehot = np.eye(n_classes, dtype=np.float64)[y]
    for feature in features:
        xs = x[:, feature]
        order = np.argsort(xs, kind="stable")
        xs_sorted = xs[order]
        prefix = np.vstack(
            [np.zeros(n_classes), np.cumsum(onehot[order], axis=0)]
        )
        positions = np.flatnonzero(xs_sorted[1:] != xs_sorted[:-1]) + 1
        positions = positions[(positions >= min_leaf) & (positions <= n - min_leaf)]
        if not positions.size:
            continue
        impurity = _gini_by_split(
            prefix[positions], prefix[n], positions.astype(np.float64)
        )
        k = int(np.argmin(impurity))
        if best is None or impurity[k] < best[0]:
            i = int(positions[k])
            threshold = (xs_sorted[i - 1] + xs_sorted[i]) / 2.0
            best = (float(impurity[k]), int(feature), threshold)
    return best


def _grow(
    x: np.ndarray,
    y: np.ndarray,
    n_classes: int,
    max_features: int,
    min_leaf: int,
    rng: np.random.RandomState,
) -> dict:
    counts = np.bincount(y, minlength=n_classes)
    if np.count_nonzero(counts) <= 1 or len(y) < 2 * min_leaf:
        return {"counts": counts.tolist()}
    features = rng.choice(x.shape[1], size=max_features, replace=False)
    split = _best_split(x, y, n_classes, features, min_leaf)
    if split is None:
        return {"counts": counts.tolist()}
    _impurity, feature, threshold = split
    mask = x[:, feature] <= threshold
    return {
        "feature": feature,
        "threshold": threshold,
        "left": _grow(x[mask], y[mask], n_classes, max_features, min_leaf, rng),
        "right": _grow(x[~mask], y[~mask], n_classes, max_features, min_leaf, rng),
    }


def _leaf_vote(node: dict) -> int:
    counts = node["counts"]
    return int(np.argmax(counts))  # argmax keeps the first (lowest) index on ties


def _tree_predict(node: dict, fv: Sequence[float]) -> int:
    while "feature" in node:
        node = node["left"] if fv[node["feature"]] <= node["threshold"] else node["right"]
    return _leaf_vote(node)


class RandomForest:
    def __init__(
        self,
        trees: list[dict],
        classes: tuple[str, ...],
        params: ForestParams,
        seed: int,
        n_features: int = 10,
    ):
        self.trees = trees
        self.classes = tuple(classes)
        self.params = params
        self.seed = seed
        self.n_features = n_features

    def predict(self, fv: Sequence[float]) -> tuple[str, float]:
        """Majority-vote label and its vote fraction; ties -> classes[0]."""
        if len(fv) != self.n_features:
            raise ValueError(
                f"feature vector has {len(fv)} fields, forest expects {self.n_features}"
            )
        votes = np.zeros(len(self.classes), dtype=np.int64)
        for tree in self.trees:
            votes[_tree_predict(tree, fv)] += 1
        winner = int(np.argmax(votes))
        return self.classes[winner], float(votes[winner]) / len(self.trees)

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "classes": list(self.classes),
            "seed": self.seed,
            "n_features": self.n_features,
            "params": {
                "n_trees": self.params.n_trees,
                "max_features": self.params.max_features,
                "min_leaf": self.params.min_leaf,
            },
            "trees": self.trees,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "RandomForest":
        version = data.get("format_version")
        if version != FORMAT_VERSION:
            raise ValueError(f"unsupported forest format version: {version!r}")
        params = ForestParams(**data["params"])
        return cls(
            data["trees"],
            tuple(data["classes"]),
            params,
            data["seed"],
            data["n_features"],
        )

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())

    @classmethod
    def load(cls, path: str) -> "RandomForest":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def train_forest(
    features: Sequence[Sequence[float]],
    labels: Sequence[str],
    params: Optional[ForestParams] = None,
    seed: int = 42,
) -> RandomForest:
    """Train a bootstrap CART forest; deterministic given the seed."""
    params = params or ForestParams()
    x = np.asarray(features, dtype=np.float64)
    if x.ndim != 2 or not x.size:
        raise ValueError("features must be a non-empty 2-D array")
    if len(labels) != x.shape[0]:
        raise ValueError("features and labels must have equal length")
    classes = tuple(sorted(set(labels)))
    if len(classes) < 2:
        raise ValueError("training data must contain at least two labels")
    max_features = params.validate(x.shape[1])
    class_index = {c: k for k, c in enumerate(classes)}
    y = np.array([class_index[label] for label in labels], dtype=np.int64)

    trees = []
    n = x.shape[0]
    for t in range(params.n_trees):
        rng = np.random.RandomState(seed + t)
        sample = rng.randint(0, n, size=n)
        trees.append(
            _grow(x[sample], y[sample], len(classes), max_features, params.min_leaf, rng)
        )
    return RandomForest(trees, classes, params, seed, n_features=x.shape[1])

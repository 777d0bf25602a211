"""Dataset ingestion, quantization and empirical distributions."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from .distribution import JointDistribution
from .info import clip_zero

STRATEGIES = ("equal-width", "equal-frequency", "pass-through")


@dataclass(frozen=True)
class QuantizerSpec:
    """How to turn a raw numeric column into discrete codes."""

    strategy: str = "equal-frequency"
    bins: int = 5

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown quantizer strategy {self.strategy!r}")
        if self.strategy != "pass-through" and self.bins < 2:
            raise ValueError("bins must be >= 2")


@dataclass(frozen=True)
class Dataset:
    """n samples of m discrete-coded feature columns plus a class column.

    Immutable after construction; the backing arrays are marked read-only.
    """

    features: np.ndarray              # (n, m) integer codes
    class_codes: np.ndarray           # (n,)
    feature_cards: tuple[int, ...]
    class_card: int
    feature_names: tuple[str, ...]
    target_name: str
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        feats = np.ascontiguousarray(self.features, dtype=np.int64)
        cls = np.ascontiguousarray(self.class_codes, dtype=np.int64)
        if feats.ndim != 2 or cls.ndim != 1:
            raise ValueError("features must be 2-D and class_codes 1-D")
        n, m = feats.shape
        if n < 1 or m < 1:
            raise ValueError("need at least one sample and one feature")
        if cls.shape[0] != n:
            raise ValueError("class column length mismatch")
        if len(self.feature_names) != m or len(self.feature_cards) != m:
            raise ValueError("feature names/cardinalities mismatch")
        if len(set(self.feature_names)) != m or self.target_name in self.feature_names:
            raise ValueError("column names must be distinct")
        for j, card in enumerate(self.feature_cards):
            col = feats[:, j]
            if col.min() < 0 or col.max() >= card:
                raise ValueError(f"codes out of range in column {self.feature_names[j]!r}")
        if cls.min() < 0 or cls.max() >= self.class_card:
            raise ValueError("class codes out of range")
        feats.setflags(write=False)
        cls.setflags(write=False)
        object.__setattr__(self, "features", feats)
        object.__setattr__(self, "class_codes", cls)
        object.__setattr__(self, "feature_names", tuple(self.feature_names))
        object.__setattr__(self, "feature_cards", tuple(self.feature_cards))
        object.__setattr__(self, "meta", MappingProxyType(dict(self.meta)))

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def m(self) -> int:
        return self.features.shape[1]

    def column_index(self, name: str) -> int:
        try:
            return self.feature_names.index(name)
        except ValueError:
            raise ValueError(f"unknown column {name!r}") from None

    def codes(self, name: str) -> tuple[np.ndarray, int]:
        """Codes and cardinality for a feature column or the target."""
        if name == self.target_name:
            return self.class_codes, self.class_card
        j = self.column_index(name)
        return self.features[:, j], self.feature_cards[j]


def _dense_recode(codes: np.ndarray) -> tuple[np.ndarray, int]:
    """Relabel codes to 0..K-1 preserving order; K = distinct count."""
    uniq, inv = np.unique(codes, return_inverse=True)
    return inv.astype(np.int64), len(uniq)


def quantize_column(values: np.ndarray, spec: QuantizerSpec) -> tuple[np.ndarray, int]:
    """Discretize one numeric column into dense codes."""
    values = np.asarray(values, dtype=float)
    if spec.strategy == "pass-through":
        if not np.all(values == np.floor(values)):
            raise ValueError("pass-through quantizer requires integer-valued column")
        return _dense_recode(values.astype(np.int64))
    lo, hi = values.min(), values.max()
    if lo == hi:
        return np.zeros(len(values), dtype=np.int64), 1
    if spec.strategy == "equal-width":
        width = (hi - lo) / spec.bins
        raw = np.minimum((values - lo) // width, spec.bins - 1).astype(np.int64)
        return _dense_recode(raw)
    # equal-frequency: thresholds at order statistics so that, for all-distinct
    # values, per-bin counts differ by at most 1
    order = np.sort(values)
    n = len(values)
    cuts = [order[int(np.ceil(n * i / spec.bins)) - 1] for i in range(1, spec.bins)]
    raw = np.searchsorted(np.asarray(cuts), values, side="left").astype(np.int64)
    return _dense_recode(raw)


def _encode_column(raw: list[str], name: str, spec: QuantizerSpec) -> tuple[np.ndarray, int]:
    stripped = [v.strip() for v in raw]
    if any(v == "" for v in stripped):
        raise ValueError(f"missing value in column {name!r}")
    try:
        numeric = np.array([float(v) for v in stripped])
    except ValueError:
        # string column: deterministic lexicographic label encoding
        labels = sorted(set(stripped))
        table = {lab: i for i, lab in enumerate(labels)}
        return np.array([table[v] for v in stripped], dtype=np.int64), len(labels)
    return quantize_column(numeric, spec)


def load_csv(path, target_name: str,
             quantizer: QuantizerSpec = QuantizerSpec()) -> Dataset:
    """Load an RFC-4180-style CSV with a header row into a Dataset.

    Numeric feature columns are quantized per `quantizer`; string columns
    are label-encoded in lexicographic order.  The target column is never
    binned (pass-through for numeric targets).
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError("empty CSV file") from None
        header = [h.strip() for h in header]
        rows = list(reader)
    if target_name not in header:
        raise ValueError(f"target column {target_name!r} not found in header")
    if not rows:
        raise ValueError("CSV has a header but no data rows")
    width = len(header)
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ValueError(f"ragged row {i + 2}: expected {width} fields, got {len(row)}")
    columns = {name: [row[j] for row in rows] for j, name in enumerate(header)}
    feat_names = [h for h in header if h != target_name]
    codes = []
    cards = []
    for name in feat_names:
        col, card = _encode_column(columns[name], name, quantizer)
        codes.append(col)
        cards.append(card)
    cls, class_card = _encode_column(
        columns[target_name], target_name, QuantizerSpec("pass-through", 2))
    return Dataset(
        features=np.column_stack(codes),
        class_codes=cls,
        feature_cards=tuple(cards),
        class_card=class_card,
        feature_names=tuple(feat_names),
        target_name=target_name,
        meta={"source": str(path), "quantizer": quantizer.strategy, "bins": quantizer.bins},
    )


def composite_view(ds: Dataset, vars) -> tuple[np.ndarray, int]:
    """Map each distinct observed tuple of `vars` to a distinct code.

    Cardinality equals the number of distinct observed tuples; singleton
    sets reduce to an identity-style recoding.
    """
    names = [vars] if isinstance(vars, str) else list(vars)
    if not names:
        raise ValueError("composite_view needs a nonempty variable set")
    cols = [ds.codes(v)[0] for v in names]
    if len(cols) == 1:
        return _dense_recode(cols[0])
    stacked = np.column_stack(cols)
    _, inv = np.unique(stacked, axis=0, return_inverse=True)
    inv = inv.astype(np.int64)
    return inv, int(inv.max()) + 1


def empirical_distribution(ds: Dataset, vars) -> JointDistribution:
    """Plug-in joint distribution of the named columns (counts / n)."""
    names = [vars] if isinstance(vars, str) else list(vars)
    if not names:
        raise ValueError("empirical_distribution needs a nonempty variable set")
    cols = [ds.codes(v) for v in names]
    stacked = np.column_stack([c for c, _ in cols])
    uniq, counts = np.unique(stacked, axis=0, return_counts=True)
    n = ds.n
    mass = {tuple(int(v) for v in state): int(cnt) / n
            for state, cnt in zip(uniq, counts)}
    return JointDistribution(
        variables=tuple(names),
        cardinalities=tuple(card for _, card in cols),
        mass=mass,
        origin="empirical",
        sample_count=n,
    )


def _counts2(a, ca, b, cb, n):
    return np.bincount(a * cb + b, minlength=ca * cb).reshape(ca, cb) / n


def mutual_information(ds: Dataset, x, y) -> float:
    """Plug-in I(X;Y) in bits; X and Y may be column sets (composite views)."""
    a, ca = composite_view(ds, x)
    b, cb = composite_view(ds, y)
    pxy = _counts2(a, ca, b, cb, ds.n)
    px = pxy.sum(axis=1, keepdims=True)
    py = pxy.sum(axis=0, keepdims=True)
    nz = pxy > 0
    mi = float(np.sum(pxy[nz] * np.log2(pxy[nz] / (px * py)[nz])))
    return max(clip_zero(mi), 0.0)


def conditional_mutual_information(ds: Dataset, x, y, z) -> float:
    """Plug-in I(X;Y|Z) in bits; empty Z reduces to mutual_information."""
    znames = [z] if isinstance(z, str) else list(z)
    if not znames:
        return mutual_information(ds, x, y)
    a, ca = composite_view(ds, x)
    b, cb = composite_view(ds, y)
    c, cz = composite_view(ds, znames)
    n = ds.n
    counts = np.bincount((a * cb + b) * cz + c,
                         minlength=ca * cb * cz).reshape(ca, cb, cz) / n
    pz = counts.sum(axis=(0, 1))
    paz = counts.sum(axis=1)
    pbz = counts.sum(axis=0)
    nz = counts > 0
    num = counts * pz[None, None, :]
    den = paz[:, None, :] * pbz[None, :, :]
    cmi = float(np.sum(counts[nz] * np.log2(num[nz] / den[nz])))
    return max(clip_zero(cmi), 0.0)


def entropy(ds: Dataset, vars) -> float:
    """Plug-in H(vars) in bits."""
    a, _ = composite_view(ds, vars)
    p = np.bincount(a) / ds.n
    p = p[p > 0]
    return max(clip_zero(float(-np.sum(p * np.log2(p)))), 0.0)

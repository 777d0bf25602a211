"""miselect: information-theoretic feature selection for discrete data."""

from .distribution import JointDistribution
from .info import (
    entropy,
    conditional_entropy,
    mutual_information,
    conditional_mutual_information,
    interaction_information,
    total_correlation,
    joint_mi_by_decomposition,
)
from .data import (
    Dataset,
    QuantizerSpec,
    load_csv,
    empirical_distribution,
    composite_view,
)
from .criteria import CriterionSpec, ScoreBoard, score, score_all
from .search import (
    SelectionTrace,
    forward_select,
    backward_eliminate,
    plus_l_take_away_r,
)
from .structure import (
    RelevanceLevel,
    StructureReport,
    classify_relevance,
    is_markov_blanket,
    find_minimal_markov_blankets,
    dmi,
    minimal_sufficient_subsets,
    analyze,
)
from .bounds import ErrorBounds, bayes_error_bounds, feature_bounds_table
from .datagen import SyntheticSpec, example1, generate

__version__ = "0.1.0"

__all__ = [
    "JointDistribution",
    "entropy",
    "conditional_entropy",
    "mutual_information",
    "conditional_mutual_information",
    "interaction_information",
    "total_correlation",
    "joint_mi_by_decomposition",
    "Dataset",
    "QuantizerSpec",
    "load_csv",
    "empirical_distribution",
    "composite_view",
    "CriterionSpec",
    "ScoreBoard",
    "score",
    "score_all",
    "SelectionTrace",
    "forward_select",
    "backward_eliminate",
    "plus_l_take_away_r",
    "RelevanceLevel",
    "StructureReport",
    "classify_relevance",
    "is_markov_blanket",
    "find_minimal_markov_blankets",
    "dmi",
    "minimal_sufficient_subsets",
    "analyze",
    "ErrorBounds",
    "bayes_error_bounds",
    "feature_bounds_table",
    "SyntheticSpec",
    "example1",
    "generate",
]

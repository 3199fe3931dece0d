"""Empirical ROC and Kolmogorov-Smirnov curves for continuous-score binary
classifiers, and the unit-determinant linear map between them under which
``AUC_ROC = 0.5 + AUC_KS``."""

from kroc.averaging import (
    AveragedKsCurve,
    ProjectedRocBand,
    average_ks_curves,
    project_average_to_roc,
    vertical_average_roc,
)
from kroc.curves import (
    ClassCounts,
    KsCurve,
    LabeledSample,
    RocCurve,
    TieGroup,
    build_curves,
    build_ks,
    build_roc,
    rank_and_group,
    tally_classes,
)
from kroc.errors import (
    DegeneratePrevalence,
    EmptySample,
    InsufficientFolds,
    InvalidLabel,
    KrocError,
    NonFiniteScore,
    ParseError,
    SingleClassSample,
)
from kroc.metrics import (
    AreaReport,
    PointMetric,
    auc_ks,
    auc_pairwise_oracle,
    auc_roc,
    gini,
    max_ks2,
    max_ks2_projection,
    mvd,
    polyline_area,
    verify_identity,
)
from kroc.segopt import find_monotone_segments, reorder_for_max_ks
from kroc.synth import BinormalSpec, gen_binormal, gen_ideal, gen_random
from kroc.transform import (
    KsRocTransform,
    apply_to_point,
    decompose,
    determinant,
    invert_point,
    make_transform,
)

__version__ = "0.1.0"

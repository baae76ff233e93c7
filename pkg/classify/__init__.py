from classify.conformal import (
    check_conformal_S,
    check_norm_invariance,
    conformal_scale,
    sigma_gradient,
)
from classify.isotropy import (
    check_lemma_2_1,
    check_weak_isotropy_structure,
    fit_weak_einstein,
    fit_weakly_isotropic_r,
    test_isotropic_S,
    verdict_for,
)
from classify.models import ClassificationResult, ConformalSpec, ImplicationReport, Verdict
from classify.sampling import halton, sample_points, unit_directions
from classify.theorems import (
    ConformalFlatnessReport,
    check_theorem_1_2,
    sweep,
    theorem_1_1_pipeline,
)

__all__ = [
    "ClassificationResult",
    "ConformalFlatnessReport",
    "ConformalSpec",
    "ImplicationReport",
    "Verdict",
    "check_conformal_S",
    "check_lemma_2_1",
    "check_norm_invariance",
    "check_theorem_1_2",
    "check_weak_isotropy_structure",
    "conformal_scale",
    "fit_weak_einstein",
    "fit_weakly_isotropic_r",
    "halton",
    "sample_points",
    "sigma_gradient",
    "sweep",
    "test_isotropic_S",
    "theorem_1_1_pipeline",
    "unit_directions",
    "verdict_for",
]

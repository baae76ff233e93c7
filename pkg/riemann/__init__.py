from riemann.alpha import alpha_at, christoffel, riemann_tensor
from riemann.beta import beta_invariants
from riemann.contraction import contract_at, cubic, linear, quadratic
from riemann.models import AlphaData, BetaInvariants, EvalContext

__all__ = [
    "AlphaData",
    "BetaInvariants",
    "EvalContext",
    "alpha_at",
    "beta_invariants",
    "christoffel",
    "contract_at",
    "cubic",
    "linear",
    "quadratic",
    "riemann_tensor",
]

"""Term tables of the scalar-curvature polynomials Sigma and Gamma.

Each polynomial is a list of ``Term``s: a coefficient depending on (n, b^2)
times a product of contraction symbols (see ``EvalContext.symbols``). The
``*_PRINTED`` tables are the published expansion, kept term for term.
``CORRECTIONS`` lists every coefficient that disagrees with a re-expansion of
the Ricci pieces; ``SIGMA_1``/``SIGMA_2``/``GAMMA_1``/``GAMMA_2`` are the
printed tables with those coefficients replaced, and the closed route reads
only these.

Symbol glossary (suffix 0 = contraction with y):

  alpha2, beta            alpha^2 and beta
  t_mm, q_mm, r_mm        traces t^m_m, q^m_m, r^m_m
  s_mm                    covariant divergence s^m_{;m}
  bs_imm                  b^i s^m_{i;m}
  t                       b^i t_i
  r_alpha                 scalar curvature of alpha
  ric, ric_b0             ^alpha Ric_00 and ^alpha Ric_ij b^i y^j
  s_m0m, r_mm0, r_0mm     s^m_{0;m}, r^m_{m;0}, r^m_{0;m}
  r_000, s_00, e_000      r_{00;0}, s_{0;0}, e_{00;0}
  q_00i_b, r_000i_b, s_000i_b
                          y-derivatives q_{00.i} b^i, r_{00;0.i} b^i, s_{0;0.i} b^i
"""

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass

from jets import Scalar

Coefficient = Callable[[int, float], float]

_A4 = ("alpha2", "alpha2")
_A2 = ("alpha2",)
_B2 = ("beta", "beta")
_B3 = ("beta", "beta", "beta")
_B4 = ("beta", "beta", "beta", "beta")


@dataclass(frozen=True)
class Term:
    coefficient: Coefficient
    factors: tuple[str, ...]

    @property
    def label(self) -> str:
        counts: dict[str, int] = {}
        for f in self.factors:
            counts[f] = counts.get(f, 0) + 1
        return "*".join(f if c == 1 else f"{f}^{c}" for f, c in counts.items())

    def evaluate(self, symbols: Mapping[str, Scalar], n: int, b2: float) -> Scalar:
        value: Scalar = self.coefficient(n, b2)
        for name in self.factors:
            value = value * symbols[name]
        return value


def _t(coefficient: Coefficient, *factors: str) -> Term:
    return Term(coefficient, factors)


def evaluate_table(
    table: Sequence[Term], symbols: Mapping[str, Scalar], n: int, b2: float
) -> Scalar:
    total: Scalar = 0.0
    for term in table:
        total = total + term.evaluate(symbols, n, b2)
    return total


SIGMA_1_PRINTED: tuple[Term, ...] = (
    # alpha^4 beta
    _t(lambda n, b2: -4 * (2 * b2 + 4 * n + 7), "t_mm", "beta", *_A4),
    _t(lambda n, b2: -24, "bs_imm", "beta", *_A4),
    _t(lambda n, b2: 24 * (n - 1), "q_mm", "beta", *_A4),
    _t(lambda n, b2: 12 * (n - 1), "s_mm", "beta", *_A4),
    _t(lambda n, b2: 8 * (n - 1), "t", "beta", *_A4),
    # alpha^4
    _t(lambda n, b2: -8, "ric_b0", *_A4),
    _t(lambda n, b2: 4 * (2 * b2 + n + 1), "s_m0m", *_A4),
    _t(lambda n, b2: -4 * (6 * b2 * n - 6 * b2 + n * n - 5), "t_0", *_A4),
    _t(lambda n, b2: -12 * (n - 1), "r_mm", "s_0", *_A4),
    _t(lambda n, b2: -16 * (n - 1), "q_00i_b", *_A4),
    _t(lambda n, b2: -2 * (n - 1), "r_mm0", *_A4),
    _t(lambda n, b2: -4 * (n - 1), "r_0mm", *_A4),
    _t(lambda n, b2: -8 * (n - 1), "s_000i_b", *_A4),
    _t(lambda n, b2: -24 * (n - 1), "p_0", *_A4),
    # alpha^2 beta^3
    _t(lambda n, b2: -4 * (3 + 4 * n), "t_mm", *_B3, *_A2),
    _t(lambda n, b2: -8, "bs_imm", *_B3, *_A2),
    _t(lambda n, b2: 8 * (n - 1), "q_mm", *_B3, *_A2),
    _t(lambda n, b2: 4 * (n - 1), "s_mm", *_B3, *_A2),
    # alpha^2 beta^2
    _t(lambda n, b2: -24, "ric_b0", *_B2, *_A2),
    _t(lambda n, b2: 8 * (b2 + 3 * n + 2), "s_m0m", *_B2, *_A2),
    _t(lambda n, b2: -4 * (n + 1) * (5 * n - 11), "t_0", *_B2, *_A2),
    _t(lambda n, b2: -12 * (n - 1), "r_mm", "s_0", *_B2, *_A2),
    _t(lambda n, b2: -16 * (n - 1), "q_00i_b", *_B2, *_A2),
    _t(lambda n, b2: -6 * (n - 1), "r_mm0", *_B2, *_A2),
    _t(lambda n, b2: -12 * (n - 1), "r_0mm", *_B2, *_A2),
    _t(lambda n, b2: -8 * (n - 1), "s_000i_b", *_B2, *_A2),
    _t(lambda n, b2: -24 * (n - 1), "p_0", *_B2, *_A2),
    # alpha^2 beta
    _t(lambda n, b2: 4 * (2 * b2 + 1), "ric", "beta", *_A2),
    _t(lambda n, b2: -8 * (2 * b2 + 1), "t_00", "beta", *_A2),
    _t(lambda n, b2: 4 * (n - 1) * (6 * b2 + n + 5), "q_00", "beta", *_A2),
    _t(lambda n, b2: 12 * (n - 1) * (3 * n - 4), "s_0", "s_0", "beta", *_A2),
    _t(lambda n, b2: 2 * (n - 1) * (6 * b2 + n + 5), "s_00", "beta", *_A2),
    _t(lambda n, b2: 12 * (n - 1), "r_mm", "r_00", "beta", *_A2),
    _t(lambda n, b2: 72 * (n - 1), "r_0", "s_0", "beta", *_A2),
    _t(lambda n, b2: 8 * (n - 1), "r_000i_b", "beta", *_A2),
    _t(lambda n, b2: 24 * (n - 1), "w_00", "beta", *_A2),
    # alpha^2
    _t(lambda n, b2: -6 * (n - 1) * (12 * b2 + 3 * n - 19), "s_0", "r_00", *_A2),
    _t(lambda n, b2: -36 * (n - 1), "r_0", "r_00", *_A2),
    _t(lambda n, b2: -(n - 1) * (6 * b2 - n - 3), "r_000", *_A2),
    # alpha^0
    _t(lambda n, b2: 4 * (n - 1), "s_m0m", *_B4),
    _t(lambda n, b2: 4, "ric", *_B3),
    _t(lambda n, b2: -8, "t_00", *_B3),
    _t(lambda n, b2: 4 * (n - 1) ** 2, "q_00", *_B3),
    _t(lambda n, b2: 2 * (n - 1) ** 2, "s_00", *_B3),
    _t(lambda n, b2: -6 * (n - 1) ** 2, "s_0", "r_00", *_B2),
    _t(lambda n, b2: (n - 1) * (n - 3), "r_000", *_B2),
    _t(lambda n, b2: 3 * (n - 1) * (n - 6), "r_00", "r_00", "beta"),
)

SIGMA_2_PRINTED: tuple[Term, ...] = (
    # alpha^4
    _t(lambda n, b2: -4 * (b2 + n + 2), "t_mm", *_A4),
    _t(lambda n, b2: -8, "bs_imm", *_A4),
    _t(lambda n, b2: 8 * (n - 1), "q_mm", *_A4),
    _t(lambda n, b2: 4 * (n - 1), "s_mm", *_A4),
    _t(lambda n, b2: 4 * (n - 1), "t", *_A4),
    # alpha^2 beta^2
    _t(lambda n, b2: -4 * (b2 + 6 * n + 8), "t_mm", *_B2, *_A2),
    _t(lambda n, b2: -24, "bs_imm", *_B2, *_A2),
    _t(lambda n, b2: 24 * (n - 1), "q_mm", *_B2, *_A2),
    _t(lambda n, b2: 12 * (n - 1), "s_mm", *_B2, *_A2),
    _t(lambda n, b2: 4 * (n - 1), "t", *_B2, *_A2),
    # alpha^2 beta
    _t(lambda n, b2: -24, "ric_b0", "beta", *_A2),
    _t(lambda n, b2: 16 * (b2 + n + 1), "s_m0m", "beta", *_A2),
    _t(lambda n, b2: -24 * (n - 1), "r_mm", "s_0", "beta", *_A2),
    _t(lambda n, b2: -48 * (n - 1), "p_0", "beta", *_A2),
    _t(lambda n, b2: -32 * (n - 1), "q_00i_b", "beta", *_A2),
    _t(lambda n, b2: -6 * (n - 1), "r_mm0", "beta", *_A2),
    _t(lambda n, b2: -12 * (n - 1), "r_0mm", "beta", *_A2),
    _t(lambda n, b2: -16 * (n - 1), "s_000i_b", "beta", *_A2),
    _t(lambda n, b2: -8 * (3 * b2 * n - 3 * b2 + 2 * n * n - 8), "t_0", "beta", *_A2),
    # alpha^2
    _t(lambda n, b2: 4 * b2, "ric", *_A2),
    _t(lambda n, b2: -8 * b2, "t_00", *_A2),
    _t(lambda n, b2: 24 * (n - 1) * (3 * b2 + n - 4), "s_0", "s_0", *_A2),
    _t(lambda n, b2: 72 * (n - 1), "s_0", "r_0", *_A2),
    _t(lambda n, b2: 12 * (n - 1) * b2, "s_00", *_A2),
    _t(lambda n, b2: 24 * (n - 1) * b2, "q_00", *_A2),
    _t(lambda n, b2: 6 * (n - 1), "r_mm", "r_00", *_A2),
    _t(lambda n, b2: 4 * (n - 1), "r_000i_b", *_A2),
    _t(lambda n, b2: 12 * (n - 1), "w_00", *_A2),
    # alpha^0
    _t(lambda n, b2: -4 * n, "t_mm", *_B4),
    _t(lambda n, b2: 16 * n, "s_m0m", *_B3),
    _t(lambda n, b2: 4 * (n - 1), "r_0mm", *_B3),
    _t(lambda n, b2: 2 * (n - 1), "r_mm0", *_B3),
    _t(lambda n, b2: -8, "ric_b0", *_B3),
    _t(lambda n, b2: -8 * n * (n - 3), "t_0", *_B3),
    _t(lambda n, b2: 4 * (b2 + 2), "ric", *_B2),
    _t(lambda n, b2: -8 * (b2 + 2), "t_00", *_B2),
    _t(lambda n, b2: 12 * (n - 1) * (n - 2), "s_0", "s_0", *_B2),
    _t(lambda n, b2: 4 * (n - 1) * (n + 2), "s_00", *_B2),
    _t(lambda n, b2: 12 * (n - 1), "w_00", *_B2),
    _t(lambda n, b2: 6 * (n - 1), "r_mm", "r_00", *_B2),
    _t(lambda n, b2: 8 * (n - 1) * (n + 4), "q_00", *_B2),
    _t(lambda n, b2: 4 * (n - 1), "r_000i_b", *_B2),
    _t(lambda n, b2: -2 * (n - 1) * (3 * b2 - n), "r_000", "beta"),
    _t(lambda n, b2: -24 * (n - 1) * (n - 2), "s_0", "r_00", "beta"),
    _t(lambda n, b2: 36 * (n - 1), "r_0", "r_00", "beta"),
    _t(lambda n, b2: 3 * (n - 1) * (6 * b2 + n - 12), "r_00", "r_00"),
)

# The Gamma polynomials as printed, with r_00 and r_00;0 replaced by e_00 and
# e_00;0 and the r_alpha terms of 4F^4 alpha r_alpha folded in.
GAMMA_1_PRINTED: tuple[Term, ...] = (
    # alpha^4 beta
    _t(lambda n, b2: 16, "r_alpha", "beta", *_A4),
    _t(lambda n, b2: -4 * (2 * b2 + 4 * n + 7), "t_mm", "beta", *_A4),
    _t(lambda n, b2: -24, "bs_imm", "beta", *_A4),
    _t(lambda n, b2: 24 * (n - 1), "q_mm", "beta", *_A4),
    _t(lambda n, b2: 12 * (n - 1), "s_mm", "beta", *_A4),
    _t(lambda n, b2: 8 * (n - 1), "t", "beta", *_A4),
    # alpha^4
    _t(lambda n, b2: -8, "ric_b0", *_A4),
    _t(lambda n, b2: 4 * (2 * b2 + n + 1), "s_m0m", *_A4),
    _t(lambda n, b2: -12 * (n - 1), "r_mm", "s_0", *_A4),
    _t(lambda n, b2: -16 * (n - 1), "q_00i_b", *_A4),
    _t(lambda n, b2: -2 * (n - 1), "r_mm0", *_A4),
    _t(lambda n, b2: -4 * (n - 1), "r_0mm", *_A4),
    _t(lambda n, b2: -8 * (n - 1), "s_000i_b", *_A4),
    _t(lambda n, b2: -24 * (n - 1), "p_0", *_A4),
    _t(lambda n, b2: -4 * (6 * b2 * n - 6 * b2 + n * n - 5), "t_0", *_A4),
    # alpha^2 beta^3
    _t(lambda n, b2: 16, "r_alpha", *_B3, *_A2),
    _t(lambda n, b2: -4 * (4 * n + 3), "t_mm", *_B3, *_A2),
    _t(lambda n, b2: -8, "bs_imm", *_B3, *_A2),
    _t(lambda n, b2: 8 * (n - 1), "q_mm", *_B3, *_A2),
    _t(lambda n, b2: 4 * (n - 1), "s_mm", *_B3, *_A2),
    # alpha^2 beta^2
    _t(lambda n, b2: -36 * (n - 1), "r_mm", "s_0", *_B2, *_A2),
    _t(lambda n, b2: -16 * (n - 1), "q_00i_b", *_B2, *_A2),
    _t(lambda n, b2: -6 * (n - 1), "r_mm0", *_B2, *_A2),
    _t(lambda n, b2: -12 * (n - 1), "r_0mm", *_B2, *_A2),
    _t(lambda n, b2: -8 * (n - 1), "s_000i_b", *_B2, *_A2),
    _t(lambda n, b2: -24 * (n - 1), "p_0", *_B2, *_A2),
    _t(lambda n, b2: -24, "ric_b0", *_B2, *_A2),
    _t(lambda n, b2: 8 * (b2 + 3 * n + 2), "s_m0m", *_B2, *_A2),
    _t(lambda n, b2: -4 * (n + 1) * (5 * n - 11), "t_0", *_B2, *_A2),
    # alpha^2 beta
    _t(lambda n, b2: 4 * (2 * b2 + 1), "ric", "beta", *_A2),
    _t(lambda n, b2: -8 * (2 * b2 + 1), "t_00", "beta", *_A2),
    _t(lambda n, b2: 4 * (n - 1) * (6 * b2 + n + 5), "q_00", "beta", *_A2),
    _t(lambda n, b2: 8 * (n - 1), "r_000i_b", "beta", *_A2),
    _t(lambda n, b2: 4 * (n - 1) * (6 * b2 + 1), "s_00", "beta", *_A2),
    _t(lambda n, b2: 12 * (n - 1), "r_mm", "e_00", "beta", *_A2),
    _t(lambda n, b2: 144 * (n - 1), "s_0", "r_0", "beta", *_A2),
    _t(lambda n, b2: 4 * (n - 1) * (30 * b2 + 19 * n - 66), "s_0", "s_0", "beta", *_A2),
    _t(lambda n, b2: 24 * (n - 1), "w_00", "beta", *_A2),
    # alpha^2
    _t(lambda n, b2: -(n - 1) * (6 * b2 - n - 3), "e_000", *_A2),
    _t(lambda n, b2: -36 * (n - 1), "r_0", "e_00", *_A2),
    _t(lambda n, b2: -4 * (n - 1) * (15 * b2 + 5 * n - 27), "s_0", "e_00", *_A2),
    # alpha^0
    _t(lambda n, b2: 4 * (n - 1), "s_m0m", *_B4),
    _t(lambda n, b2: 4, "ric", *_B3),
    _t(lambda n, b2: -8, "t_00", *_B3),
    _t(lambda n, b2: 4 * (n - 1) ** 2, "q_00", *_B3),
    _t(lambda n, b2: 4 * (n - 1), "s_00", *_B3),
    _t(lambda n, b2: 4 * (n - 1) * (7 * n - 24), "s_0", "s_0", *_B3),
    _t(lambda n, b2: (n - 1) * (n - 3), "e_000", *_B2),
    _t(lambda n, b2: -4 * (n - 1) * (5 * n - 21), "s_0", "e_00", *_B2),
    _t(lambda n, b2: 3 * (n - 1) * (n - 6), "e_00", "e_00", "beta"),
)

GAMMA_2_PRINTED: tuple[Term, ...] = (
    # alpha^4
    _t(lambda n, b2: 4, "r_alpha", *_A4),
    _t(lambda n, b2: -4 * (b2 + n + 2), "t_mm", *_A4),
    _t(lambda n, b2: -8, "bs_imm", *_A4),
    _t(lambda n, b2: 8 * (n - 1), "q_mm", *_A4),
    _t(lambda n, b2: 4 * (n - 1), "s_mm", *_A4),
    _t(lambda n, b2: 4 * (n - 1), "t", *_A4),
    # alpha^2 beta^2
    _t(lambda n, b2: 24, "r_alpha", *_B2, *_A2),
    _t(lambda n, b2: -4 * (b2 + 6 * n + 8), "t_mm", *_B2, *_A2),
    _t(lambda n, b2: -24, "bs_imm", *_B2, *_A2),
    _t(lambda n, b2: 24 * (n - 1), "q_mm", *_B2, *_A2),
    _t(lambda n, b2: 4 * (n - 1), "t", *_B2, *_A2),
    _t(lambda n, b2: 12 * (n - 1), "s_mm", *_B2, *_A2),
    # alpha^2 beta
    _t(lambda n, b2: -24, "ric_b0", "beta", *_A2),
    _t(lambda n, b2: 16 * (b2 + n + 1), "s_m0m", "beta", *_A2),
    _t(lambda n, b2: -36 * (n - 1), "r_mm", "s_0", "beta", *_A2),
    _t(lambda n, b2: -32 * (n - 1), "q_00i_b", "beta", *_A2),
    _t(lambda n, b2: -6 * (n - 1), "r_mm0", "beta", *_A2),
    _t(lambda n, b2: -12 * (n - 1), "r_0mm", "beta", *_A2),
    _t(lambda n, b2: -16 * (n - 1), "s_000i_b", "beta", *_A2),
    _t(lambda n, b2: -48 * (n - 1), "p_0", "beta", *_A2),
    _t(lambda n, b2: -8 * (3 * b2 * n - 3 * b2 + 2 * n * n - 8), "t_0", "beta", *_A2),
    # alpha^2
    _t(lambda n, b2: 4 * b2, "ric", *_A2),
    _t(lambda n, b2: -8 * b2, "t_00", *_A2),
    _t(lambda n, b2: 24 * (n - 1) * b2, "q_00", *_A2),
    _t(lambda n, b2: 4 * (n - 1), "r_000i_b", *_A2),
    _t(lambda n, b2: 12 * (n - 1) * b2, "s_00", *_A2),
    _t(lambda n, b2: 6 * (n - 1), "r_mm", "e_00", *_A2),
    _t(lambda n, b2: 72 * (n - 1), "s_0", "r_0", *_A2),
    _t(lambda n, b2: 24 * (n - 1) * (3 * b2 + n - 4), "s_0", "s_0", *_A2),
    _t(lambda n, b2: 12 * (n - 1), "w_00", *_A2),
    # alpha^0
    _t(lambda n, b2: -4 * n, "t_mm", *_B4),
    _t(lambda n, b2: 4, "r_alpha", *_B4),
    _t(lambda n, b2: -12 * (n - 1), "r_mm", "s_0", *_B3),
    _t(lambda n, b2: -2 * (n - 1), "r_mm0", *_B3),
    _t(lambda n, b2: -4 * (n - 1), "r_0mm", *_B3),
    _t(lambda n, b2: -8, "ric_b0", *_B3),
    _t(lambda n, b2: 16 * n, "s_m0m", *_B3),
    _t(lambda n, b2: -8 * n * (n - 3), "t_0", *_B3),
    _t(lambda n, b2: 4 * (b2 + 2), "ric", *_B2),
    _t(lambda n, b2: -8 * (b2 + 2), "t_00", *_B2),
    _t(lambda n, b2: 8 * (n - 1) * (n + 2), "q_00", *_B2),
    _t(lambda n, b2: 4 * (n - 1), "r_000i_b", *_B2),
    _t(lambda n, b2: 4 * (n - 1) * (3 * b2 + 2), "s_00", *_B2),
    _t(lambda n, b2: 6 * (n - 1), "r_mm", "e_00", *_B2),
    _t(lambda n, b2: 6 * (n - 1), "s_0", "r_0", *_B2),
    _t(lambda n, b2: 8 * (n - 1) * (6 * b2 + 10 * n - 33), "s_0", "s_0", *_B2),
    _t(lambda n, b2: 12 * (n - 1), "w_00", *_B2),
    _t(lambda n, b2: -2 * (n - 1) * (3 * b2 - n), "e_000", "beta"),
    _t(lambda n, b2: -36 * (n - 1), "r_0", "e_00", "beta"),
    _t(lambda n, b2: -4 * (n - 1) * (15 * b2 + 10 * n - 48), "s_0", "e_00", "beta"),
    _t(lambda n, b2: 3 * (n - 1) * (6 * b2 + n - 12), "e_00", "e_00"),
)

@dataclass(frozen=True)
class Correction:
    """One printed coefficient and the value the re-expansion gives for it."""

    table: str
    label: str
    printed: str
    corrected: str
    coefficient: Coefficient

    def to_dict(self) -> dict[str, str]:
        return {
            "table": self.table,
            "label": self.label,
            "printed": self.printed,
            "corrected": self.corrected,
        }


# The first group in each Sigma table traces back to one slip: the F A^2 term of
# the (n - 1) Xi2 piece, A = r_00 - 2 alpha s_0, expanded with 3(n - 12) in
# place of -3(n + 4). The remaining Sigma2 entries are transcription slips the
# printed Gamma2 does not share; its own s_0 r_0 beta^2 entry carries a 3 where
# 36 belongs.
CORRECTIONS: tuple[Correction, ...] = (
    Correction(
        "sigma_1", "s_0^2*beta*alpha2", "12(n-1)(3n-4)", "12(n-1)(n+4)",
        lambda n, b2: 12 * (n - 1) * (n + 4),
    ),
    Correction(
        "sigma_1", "s_0*r_00*alpha2", "-6(n-1)(12b^2+3n-19)", "-6(n-1)(12b^2-n-3)",
        lambda n, b2: -6 * (n - 1) * (12 * b2 - n - 3),
    ),
    Correction(
        "sigma_1", "r_00^2*beta", "3(n-1)(n-6)", "-3(n-1)(n-2)",
        lambda n, b2: -3 * (n - 1) * (n - 2),
    ),
    Correction(
        "sigma_2", "s_0^2*alpha2", "24(n-1)(3b^2+n-4)", "72(n-1)b^2",
        lambda n, b2: 72 * (n - 1) * b2,
    ),
    Correction(
        "sigma_2", "s_0*r_00*beta", "-24(n-1)(n-2)", "-48(n-1)",
        lambda n, b2: -48 * (n - 1),
    ),
    Correction(
        "sigma_2", "r_00^2", "3(n-1)(6b^2+n-12)", "3(n-1)(6b^2-n-4)",
        lambda n, b2: 3 * (n - 1) * (6 * b2 - n - 4),
    ),
    Correction(
        "sigma_2", "r_0mm*beta^3", "4(n-1)", "-4(n-1)",
        lambda n, b2: -4 * (n - 1),
    ),
    Correction(
        "sigma_2", "r_mm0*beta^3", "2(n-1)", "-2(n-1)",
        lambda n, b2: -2 * (n - 1),
    ),
    Correction(
        "sigma_2", "q_00*beta^2", "8(n-1)(n+4)", "8(n-1)(n+2)",
        lambda n, b2: 8 * (n - 1) * (n + 2),
    ),
    Correction(
        "sigma_2", "r_0*r_00*beta", "36(n-1)", "-36(n-1)",
        lambda n, b2: -36 * (n - 1),
    ),
    Correction(
        "gamma_1_printed", "s_0^2*beta*alpha2", "4(n-1)(30b^2+19n-66)", "4(n-1)(30b^2+n+6)",
        lambda n, b2: 4 * (n - 1) * (30 * b2 + n + 6),
    ),
    Correction(
        "gamma_1_printed", "s_0*e_00*alpha2", "-4(n-1)(15b^2+5n-27)", "-4(n-1)(15b^2-n-3)",
        lambda n, b2: -4 * (n - 1) * (15 * b2 - n - 3),
    ),
    Correction(
        "gamma_1_printed", "s_0^2*beta^3", "4(n-1)(7n-24)", "4n(n-1)",
        lambda n, b2: 4 * n * (n - 1),
    ),
    Correction(
        "gamma_1_printed", "s_0*e_00*beta^2", "-4(n-1)(5n-21)", "4(n-1)(n-3)",
        lambda n, b2: 4 * (n - 1) * (n - 3),
    ),
    Correction(
        "gamma_1_printed", "e_00^2*beta", "3(n-1)(n-6)", "-3(n-1)(n-2)",
        lambda n, b2: -3 * (n - 1) * (n - 2),
    ),
    Correction(
        "gamma_2_printed", "s_0^2*alpha2", "24(n-1)(3b^2+n-4)", "72(n-1)b^2",
        lambda n, b2: 72 * (n - 1) * b2,
    ),
    Correction(
        "gamma_2_printed", "s_0^2*beta^2", "8(n-1)(6b^2+10n-33)", "8(n-1)(6b^2+n+3)",
        lambda n, b2: 8 * (n - 1) * (6 * b2 + n + 3),
    ),
    Correction(
        "gamma_2_printed", "s_0*e_00*beta", "-4(n-1)(15b^2+10n-48)", "-4(n-1)(15b^2-2n)",
        lambda n, b2: -4 * (n - 1) * (15 * b2 - 2 * n),
    ),
    Correction(
        "gamma_2_printed", "e_00^2", "3(n-1)(6b^2+n-12)", "3(n-1)(6b^2-n-4)",
        lambda n, b2: 3 * (n - 1) * (6 * b2 - n - 4),
    ),
    Correction(
        "gamma_2_printed", "s_0*r_0*beta^2", "6(n-1)", "72(n-1)",
        lambda n, b2: 72 * (n - 1),
    ),
)

PRINTED_TABLES: dict[str, tuple[Term, ...]] = {
    "sigma_1": SIGMA_1_PRINTED,
    "sigma_2": SIGMA_2_PRINTED,
    "gamma_1_printed": GAMMA_1_PRINTED,
    "gamma_2_printed": GAMMA_2_PRINTED,
}


def apply_corrections(
    name: str, table: Sequence[Term], corrections: Sequence[Correction] = CORRECTIONS
) -> tuple[Term, ...]:
    """``table`` with the coefficients of every correction filed under ``name`` replaced.

    Raises:
        ValueError: a correction label does not match exactly one term
    """
    replaced = list(table)
    for correction in corrections:
        if correction.table != name:
            continue
        hits = [i for i, term in enumerate(table) if term.label == correction.label]
        if len(hits) != 1:
            raise ValueError(
                f"{name}: correction {correction.label!r} matches {len(hits)} terms"
            )
        replaced[hits[0]] = Term(correction.coefficient, table[hits[0]].factors)
    return tuple(replaced)


SIGMA_1 = apply_corrections("sigma_1", SIGMA_1_PRINTED)
SIGMA_2 = apply_corrections("sigma_2", SIGMA_2_PRINTED)
GAMMA_1 = apply_corrections("gamma_1_printed", GAMMA_1_PRINTED)
GAMMA_2 = apply_corrections("gamma_2_printed", GAMMA_2_PRINTED)

TABLES: dict[str, tuple[Term, ...]] = {
    "sigma_1": SIGMA_1,
    "sigma_2": SIGMA_2,
    "gamma_1": GAMMA_1,
    "gamma_2": GAMMA_2,
}


def e_substituted(symbols: Mapping[str, Scalar]) -> dict[str, Scalar]:
    """Symbols with r_00 and r_00;0 rewritten through e_00 and e_00;0."""
    beta, s_0, e_00 = symbols["beta"], symbols["s_0"], symbols["e_00"]
    substituted = dict(symbols)
    substituted["r_00"] = e_00 - 2.0 * beta * s_0
    substituted["r_000"] = symbols["e_000"] - 2.0 * (
        beta * symbols["s_00"] + s_0 * e_00 - 2.0 * beta * s_0 * s_0
    )
    return substituted

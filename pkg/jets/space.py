"""Monomial tables for truncated multivariate Taylor jets."""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

from utils.errors import JetOrderError

logger = logging.getLogger(__name__)

MAX_ORDER = 6

MultiIndex = tuple[int, ...]


@dataclass(frozen=True)
class JetSpace:
    """The set of multi-indices a jet keeps.

    A multi-index ``alpha`` belongs to the space when ``sum(alpha) <= order`` and
    the entries of the first ``lead`` variables sum to at most ``lead_order``.
    With ``lead == 0`` the space is the plain total-order truncation.

    The set is downward closed, so truncated products stay exact on it.
    """

    nvars: int
    order: int
    lead: int = 0
    lead_order: int = MAX_ORDER

    def __post_init__(self) -> None:
        if self.order > MAX_ORDER:
            raise JetOrderError(
                f"jet order {self.order} exceeds the engine limit {MAX_ORDER}"
            )
        if self.order < 0 or self.nvars < 1:
            raise JetOrderError(
                f"invalid jet space: nvars={self.nvars}, order={self.order}"
            )
        if not 0 <= self.lead <= self.nvars:
            raise JetOrderError(f"lead block {self.lead} outside 0..{self.nvars}")
        # normalize so that equal sets compare and hash equal
        lead_order = self.order if self.lead == 0 else self.lead_order
        object.__setattr__(self, "lead_order", max(0, min(lead_order, self.order)))
        if self.lead_order == self.order:
            object.__setattr__(self, "lead", 0)

    def contains(self, alpha: MultiIndex) -> bool:
        return (
            len(alpha) == self.nvars
            and min(alpha) >= 0
            and sum(alpha) <= self.order
            and sum(alpha[: self.lead]) <= self.lead_order
        )

    @property
    def monomials(self) -> tuple[MultiIndex, ...]:
        return _monomials(self)

    @property
    def size(self) -> int:
        return len(_monomials(self))

    def index(self, alpha: MultiIndex) -> int:
        return _index_map(self)[tuple(alpha)]

    def meet(self, other: "JetSpace") -> "JetSpace":
        """Largest space contained in both ``self`` and ``other``."""
        if self == other:
            return self
        if self.nvars != other.nvars:
            raise ValueError(
                f"cannot combine jets in {self.nvars} and {other.nvars} variables"
            )
        if self.lead and other.lead and self.lead != other.lead:
            raise ValueError("jets carry incompatible lead blocks")
        lead = self.lead or other.lead
        caps = [s.lead_order if s.lead else s.order for s in (self, other)]
        return JetSpace(
            self.nvars, min(self.order, other.order), lead, min(caps)
        )

    def derivative_space(self, var: int) -> "JetSpace":
        """Space on which the derivative in ``var`` is fully determined."""
        if self.order == 0:
            raise JetOrderError("cannot differentiate an order-0 jet")
        if self.lead and var < self.lead:
            lead_order = self.lead_order - 1
        else:
            lead_order = self.lead_order if self.lead else self.order - 1
        return JetSpace(self.nvars, self.order - 1, self.lead, lead_order)


def _compositions(nvars: int, budget: int) -> list[MultiIndex]:
    if nvars == 1:
        return [(k,) for k in range(budget + 1)]
    out: list[MultiIndex] = []
    for first in range(budget + 1):
        out.extend((first, *rest) for rest in _compositions(nvars - 1, budget - first))
    return out


@lru_cache(maxsize=None)
def _monomials(space: JetSpace) -> tuple[MultiIndex, ...]:
    kept = [
        alpha
        for alpha in _compositions(space.nvars, space.order)
        if sum(alpha[: space.lead]) <= space.lead_order
    ]
    kept.sort(key=lambda alpha: (sum(alpha), tuple(-k for k in alpha)))
    return tuple(kept)


@lru_cache(maxsize=None)
def _index_map(space: JetSpace) -> dict[MultiIndex, int]:
    return {alpha: i for i, alpha in enumerate(_monomials(space))}


@lru_cache(maxsize=None)
def factorial_weights(space: JetSpace) -> np.ndarray:
    """alpha! for every monomial of the space."""
    return np.array(
        [float(np.prod([factorial(k) for k in alpha])) for alpha in _monomials(space)]
    )


@lru_cache(maxsize=None)
def product_table(space: JetSpace) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Index triples (i, j, l) with monomial_i + monomial_j = monomial_l."""
    index = _index_map(space)
    left: list[int] = []
    right: list[int] = []
    target: list[int] = []
    for l_idx, alpha in enumerate(_monomials(space)):
        for beta in itertools.product(*(range(k + 1) for k in alpha)):
            gamma = tuple(a - b for a, b in zip(alpha, beta))
            left.append(index[beta])
            right.append(index[gamma])
            target.append(l_idx)
    logger.debug(
        f"product table for {space}: {space.size} monomials, {len(target)} pairs"
    )
    return (
        np.array(left, dtype=np.intp),
        np.array(right, dtype=np.intp),
        np.array(target, dtype=np.intp),
    )


@lru_cache(maxsize=None)
def derivative_table(space: JetSpace, var: int) -> tuple[JetSpace, np.ndarray, np.ndarray]:
    """Target space, source indices and integer factors for d/d(var)."""
    target = space.derivative_space(var)
    index = _index_map(space)
    sources = []
    factors = []
    for beta in _monomials(target):
        raised = list(beta)
        raised[var] += 1
        sources.append(index[tuple(raised)])
        factors.append(float(beta[var] + 1))
    return target, np.array(sources, dtype=np.intp), np.array(factors)


@lru_cache(maxsize=None)
def projection_table(source: JetSpace, target: JetSpace) -> np.ndarray:
    """Indices in ``source`` of every monomial of the smaller ``target``."""
    index = _index_map(source)
    return np.array([index[alpha] for alpha in _monomials(target)], dtype=np.intp)

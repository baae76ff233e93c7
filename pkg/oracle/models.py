from dataclasses import dataclass
from typing import Any

import numpy as np


@dataclass(frozen=True)
class SprayData:
    """Spray coefficients and their first and second derivatives at (x, y).

    ``G[i]``, ``Gx[i, k] = dG^i/dx^k``, ``Gy[i, k] = dG^i/dy^k``,
    ``Gxy[i, j, k] = d^2G^i/dx^j dy^k``, ``Gyy[i, j, k] = d^2G^i/dy^j dy^k``.
    """

    x: tuple[float, ...]
    y: tuple[float, ...]
    G: np.ndarray
    Gx: np.ndarray
    Gy: np.ndarray
    Gxy: np.ndarray
    Gyy: np.ndarray

    @property
    def n(self) -> int:
        return len(self.x)

    def to_dict(self) -> dict[str, Any]:
        return {"x": list(self.x), "y": list(self.y), "G": self.G.tolist()}

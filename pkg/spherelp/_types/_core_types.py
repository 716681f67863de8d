from collections.abc import Sequence
from typing import Literal

import numpy as np
from numpy.typing import NDArray

FloatArray = NDArray[np.float64]
IntArray = NDArray[np.int64]
PointLike = Sequence[float] | FloatArray
VectorsLike = Sequence[Sequence[float]] | FloatArray

LpStatus = Literal["optimal", "infeasible", "unbounded", "iteration-limit"]
BoundKind = Literal["per-m", "sequence-liminf"]

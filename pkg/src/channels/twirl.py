"""Isotropic twirl in closed form"""

import numpy as np

from ..errors import ValidationError
from ..linalg import BipartiteOperator
from ..states import max_entangled


def isotropic_twirl(x: BipartiteOperator) -> BipartiteOperator:
    """
    T(X) = Phi Tr[Phi X] + (I - Phi)/(d^2 - 1) Tr[(I - Phi) X] on C^d (x) C^d.

    Equals the average of (U (x) conj(U)) X (U (x) conj(U))^dag over the
    unitary group, so it is LOCC and maps every operator to an isotropic one.
    """
    if x.dim_a != x.dim_b:
        raise ValidationError(f"Twirl needs equal local dimensions, got {x.dims}")
    d = x.dim_a
    if d < 2:
        raise ValidationError("Twirl is undefined for d = 1")
    phi = max_entangled(d).matrix
    complement = np.eye(d * d) - phi
    overlap = np.trace(phi @ x.matrix)
    rest = np.trace(complement @ x.matrix)
    return x.with_matrix(phi * overlap + complement * rest / (d * d - 1))

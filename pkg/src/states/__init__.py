"""Named states, parametric families and random states"""

from .library import (
    FAMILIES,
    MONOGAMY_KET,
    StateFamily,
    antisym_rank2,
    convexity_trio,
    family_omega,
    family_sigma,
    family_tau,
    get_family,
    isotropic_state,
    ket,
    max_entangled,
    mix_with_identity,
    monogamy_state,
    product_state,
    projector,
    tensor_power,
    validate_density,
)
from .random import random_pure_state, random_state

__all__ = [
    "FAMILIES",
    "MONOGAMY_KET",
    "StateFamily",
    "antisym_rank2",
    "convexity_trio",
    "family_omega",
    "family_sigma",
    "family_tau",
    "get_family",
    "isotropic_state",
    "ket",
    "max_entangled",
    "mix_with_identity",
    "monogamy_state",
    "product_state",
    "projector",
    "random_pure_state",
    "random_state",
    "tensor_power",
    "validate_density",
]

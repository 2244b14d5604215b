from src.expansion.integer import int_negabase, int_to_base
from src.expansion.models import OrbitResult, OrbitStatus
from src.expansion.negative import (
    d_left,
    d_minus_beta,
    d_star,
    in_interval,
    is_admissible,
    left_endpoint,
    negative_alphabet,
    orbit_expansion,
    reference_words,
    right_endpoint,
    t_minus_beta_step,
)
from src.expansion.positive import (
    beta_orbit_expansion,
    d_beta,
    d_beta_one,
    d_star_beta_one,
    is_beta_admissible,
    positive_alphabet,
    t_beta_step,
)

__all__ = [
    "OrbitResult",
    "OrbitStatus",
    "beta_orbit_expansion",
    "d_beta",
    "d_beta_one",
    "d_left",
    "d_minus_beta",
    "d_star",
    "d_star_beta_one",
    "in_interval",
    "int_negabase",
    "int_to_base",
    "is_admissible",
    "is_beta_admissible",
    "left_endpoint",
    "negative_alphabet",
    "orbit_expansion",
    "positive_alphabet",
    "reference_words",
    "right_endpoint",
    "t_beta_step",
    "t_minus_beta_step",
]

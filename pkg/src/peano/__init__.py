"""
Falha do teorema de Peano em c₀: campo de Dieudonné, campos espalhados,
operador L e testemunhas de explosão.
"""

from src.peano.fields import (
    CoordinateField,
    FieldKind,
    TruncatedPoint,
    combined_eval,
    combined_field,
    dieudonne_coord,
    dieudonne_field,
    l1_bound_check,
    lipschitz_transfer_check,
    spread_coord,
    spread_field,
)
from src.peano.ode import (
    ScalarCauchyProblem,
    Trajectory,
    analytic_time,
    antiderivative,
    crossing_time,
    dieudonne_integral_check,
    integrate_family,
    integrate_reversed,
    integrate_scalar,
)
from src.peano.witness import (
    BlowupWitness,
    CoefficientIdentification,
    RankCheck,
    first_nonzero_coefficient,
    identify_coefficient,
    peano_failure_witness,
    spread_independence_check,
    witness_trajectory,
)

__all__ = [
    "BlowupWitness",
    "CoefficientIdentification",
    "CoordinateField",
    "FieldKind",
    "RankCheck",
    "ScalarCauchyProblem",
    "Trajectory",
    "TruncatedPoint",
    "analytic_time",
    "antiderivative",
    "combined_eval",
    "combined_field",
    "crossing_time",
    "dieudonne_coord",
    "dieudonne_field",
    "dieudonne_integral_check",
    "first_nonzero_coefficient",
    "identify_coefficient",
    "integrate_family",
    "integrate_reversed",
    "integrate_scalar",
    "l1_bound_check",
    "lipschitz_transfer_check",
    "peano_failure_witness",
    "spread_coord",
    "spread_field",
    "spread_independence_check",
    "witness_trajectory",
]

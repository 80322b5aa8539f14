from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..graphs.builders import Family


class FormulaReport(BaseModel):
    """
    Result of evaluating a closed-form sdim formula for one group and graph family.

    Serialized field names are stable: family, branch, value, n, omega_n, lambda,
    exponent, max_big_omega, omega_reduced (plus an auxiliary map).

    Attributes:
        family: Graph family the formula is about.
        branch: Identifier of the formula branch that applied.
        value: sdim given by the formula.
        n: Group order.
        omega_n: Omega(n).
        lambda_g: lambda_G, absent for CP-groups.
        exponent: exp(G).
        max_big_omega: max Omega(m) over pi_e(G).
        omega_reduced: Clique number of the reduced graph implied by the branch.
        auxiliary: Per-formula extras (t, k, m, clique number of P_R(G), ...).
    """
    family: Family
    branch: str
    value: int = Field(..., ge=0)
    n: int = Field(..., ge=1)
    omega_n: int
    lambda_g: Optional[int] = Field(default=None, alias="lambda")
    exponent: int
    max_big_omega: int
    omega_reduced: int
    auxiliary: Dict[str, int] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    def to_json_dict(self) -> dict:
        return self.model_dump(mode="json", by_alias=True)

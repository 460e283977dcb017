# models/report_models.py

import builtins
from typing import List

from pydantic import BaseModel, Field, computed_field


class Counterexample(BaseModel):
    """
    One failing case of a verification sweep.

    Attributes:
        property: Name of the property that failed
        case_index: Position of the case in the sweep order
        case: Text form of the case, e.g. "r=5/17 s=7/24"
        detail: What went wrong
    """

    property: str = Field(..., description="Name of the verified property")
    case_index: int = Field(..., ge=0, description="Position of the case in the sweep order")
    case: str = Field(..., description="The inputs of the failing case")
    detail: str = Field(..., description="Description of the failure")

    class Config:
        json_schema_extra = {
            "example": {
                "property": "decomposition",
                "case_index": 41,
                "case": "r=5/17",
                "detail": "S1 occurs 3 times in CS(r)",
            }
        }


class VerificationReport(BaseModel):
    """Result of one verification sweep; it passed iff no counterexample was found."""

    property: str = Field(..., description="Name of the verified property")
    slope_range: str = Field(..., description="The slopes swept, e.g. 'q/p with p <= 60'")
    cases_checked: int = Field(..., ge=0, description="Number of cases evaluated")
    failures: List[Counterexample] = Field(default_factory=list, description="Failing cases, ordered by case index")

    # The field named property shadows the builtin in the class body.
    @computed_field
    @builtins.property
    def passed(self) -> bool:
        return not self.failures

    class Config:
        json_schema_extra = {
            "example": {
                "property": "half-rotation",
                "slope_range": "q/p in (0, 1] with p <= 60",
                "cases_checked": 1104,
                "failures": [],
                "passed": True,
            }
        }

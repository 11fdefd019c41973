"""
Pydantic models for construction parameters and search tasks
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from crossed.monoid import FiniteMonoid


class QuParams(BaseModel):
    """Parameters of the quadratic example over Z/nZ"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Modulus of the coefficient ring")
    p: int = Field(ge=0, description="Residue p, reduced mod n")
    q: int = Field(ge=0, description="Residue q, reduced mod n")

    @model_validator(mode="after")
    def check_constraint(self):
        if self.p >= self.n or self.q >= self.n:
            raise ValueError("p and q must be reduced modulo n")
        if (self.p * self.q + 2) % self.n != 0:
            raise ValueError("pq + 2 must vanish modulo n")
        return self

    @property
    def label(self) -> str:
        return f"qu_{self.n}_{self.p}_{self.q}"


class StructureKind(str, Enum):
    XBSMOD = "xbsmod"
    XSMOD = "xsmod"
    XMOD = "xmod"


class EnumerationTask(BaseModel):
    """What to enumerate, on which monoids, within which limits"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    A: FiniteMonoid
    K: FiniteMonoid
    kind: StructureKind = StructureKind.XBSMOD
    max_order: int = Field(default=4, gt=0, description="Cap on |A| and |K|")
    node_budget: Optional[int] = Field(default=None, gt=0, description="Backtracking nodes allowed")

    @model_validator(mode="after")
    def check_caps(self):
        if self.A.size > self.max_order or self.K.size > self.max_order:
            raise ValueError(
                f"|A|={self.A.size}, |K|={self.K.size} exceed the enumeration cap {self.max_order}"
            )
        return self

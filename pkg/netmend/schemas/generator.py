from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GeneratorSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["erdos_renyi", "power_law"]
    n: int = Field(ge=2)
    p: float | None = Field(default=None, ge=0.0, le=1.0)
    gamma: float | None = Field(default=None, gt=2.0)
    seed: int

    @model_validator(mode="after")
    def check_kind_fields(self) -> "GeneratorSpec":
        if self.kind == "erdos_renyi":
            if self.p is None or self.gamma is not None:
                raise ValueError("erdos_renyi needs p and no gamma")
        elif self.gamma is None or self.p is not None:
            raise ValueError("power_law needs gamma and no p")
        return self

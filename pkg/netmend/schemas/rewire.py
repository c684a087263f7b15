from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


class RewireRecord(BaseModel):
    """One restoration operation and the network state right after it."""

    model_config = ConfigDict(frozen=True)

    step: int = Field(ge=1)
    kind: Literal["rewire", "add"]
    i: int
    j: int
    removed: tuple[int, int] | None = None
    theta: float = Field(ge=0.0)
    cost: float = Field(ge=1.0, le=2.0)
    robustness_index: float = Field(ge=0.0, le=1.0)
    density: float = Field(ge=0.0, le=1.0)
    n_lcc: int
    m_lcc: int
    components: int = Field(ge=1)

    @model_validator(mode="after")
    def check_removed(self) -> "RewireRecord":
        if (self.kind == "rewire") != (self.removed is not None):
            raise ValueError("removed edge must be present exactly for rewire steps")
        return self


class RewirePlan(BaseModel):
    mechanism: Literal["strategic", "random", "budget"] = "strategic"
    records: list[RewireRecord] = Field(default_factory=list)

    @property
    def energies(self) -> list[float]:
        return [record.theta for record in self.records]

    @property
    def costs(self) -> list[float]:
        return [record.cost for record in self.records]

    @property
    def lcc_anchors(self) -> list[int]:
        return [record.i for record in self.records]

    @property
    def component_anchors(self) -> list[int]:
        return [record.j for record in self.records]

    @property
    def total_cost(self) -> float:
        return sum(self.costs)

    def __len__(self) -> int:
        return len(self.records)

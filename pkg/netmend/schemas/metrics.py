from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

Phase = Literal["attack", "restore"]
Mechanism = Literal["strategic", "budget", "random", "none"]

SERIES_COLUMNS = ("step", "phase", "mechanism", "L_E", "S", "rho", "n_lcc", "m_lcc", "cum_cost")


class MetricsRow(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    step: int = Field(ge=0)
    phase: Phase
    mechanism: Mechanism
    laplacian_energy: float = Field(ge=0.0, alias="L_E")
    robustness_index: float = Field(ge=0.0, le=1.0, alias="S")
    density: float = Field(ge=0.0, le=1.0, alias="rho")
    n_lcc: int
    m_lcc: int
    cumulative_cost: float = Field(ge=0.0, alias="cum_cost")


class MetricsSeries(BaseModel):
    rows: list[MetricsRow] = Field(default_factory=list)

    def next_step(self, phase: Phase, mechanism: Mechanism) -> int:
        steps = [row.step for row in self.rows if row.phase == phase and row.mechanism == mechanism]
        return max(steps) + 1 if steps else 0

    def select(self, phase: Phase, mechanism: Mechanism | None = None) -> list[MetricsRow]:
        return [
            row
            for row in self.rows
            if row.phase == phase and (mechanism is None or row.mechanism == mechanism)
        ]

    def __len__(self) -> int:
        return len(self.rows)

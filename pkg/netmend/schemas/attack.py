from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from netmend.schemas.graph import MetricsSnapshot


class AttackSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: Literal["random", "targeted"] = "random"
    target_components: int = Field(ge=2)
    seed: int
    max_removals: int | None = Field(default=None, ge=0)


class AttackStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    step: int
    u: int
    v: int
    metrics: MetricsSnapshot

    @property
    def components(self) -> int:
        return self.metrics.components


class AttackTrace(BaseModel):
    spec: AttackSpec
    initial: MetricsSnapshot
    steps: list[AttackStep] = Field(default_factory=list)

    @property
    def removed_edges(self) -> list[tuple[int, int]]:
        return [(step.u, step.v) for step in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

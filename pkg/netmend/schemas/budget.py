from pydantic import BaseModel, ConfigDict, Field

from netmend.schemas.rewire import RewireRecord


class KnapsackSelection(BaseModel):
    model_config = ConfigDict(frozen=True)

    indices: list[int]
    total_value: float
    total_cost: float


class BudgetIncrement(BaseModel):
    """
    State after one budget increment.

    ``selected`` holds the plan indices executed in this increment, ``deferred``
    those the knapsack picked but whose re-anchored cost no longer fit.
    ``energies`` lists every LCC energy so far, newest first.
    """

    index: int = Field(ge=1)
    budget: float
    selected: list[int] = Field(default_factory=list)
    deferred: list[int] = Field(default_factory=list)
    executed: list[RewireRecord] = Field(default_factory=list)
    energies: list[float] = Field(default_factory=list)
    spent: float = 0.0


class BudgetSchedule(BaseModel):
    total_budget: float = Field(ge=0.0)
    increments: list[BudgetIncrement] = Field(default_factory=list)

    @property
    def energies(self) -> list[float]:
        """LCC energies in execution order."""
        return [record.theta for row in self.increments for record in row.executed]

    @property
    def records(self) -> list[RewireRecord]:
        return [record for row in self.increments for record in row.executed]

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ComponentPartition(BaseModel):
    """Connected components, largest first; index 0 is the LCC."""

    model_config = ConfigDict(frozen=True)

    components: list[frozenset[int]]

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def lcc(self) -> frozenset[int]:
        return self.components[0] if self.components else frozenset()

    @property
    def others(self) -> list[frozenset[int]]:
        return self.components[1:]

    def component_of(self, node: int) -> frozenset[int]:
        for component in self.components:
            if node in component:
                return component
        raise KeyError(node)


class MetricsSnapshot(BaseModel):
    model_config = ConfigDict(frozen=True)

    laplacian_energy: float = Field(ge=0.0)
    robustness_index: float = Field(ge=0.0, le=1.0)
    density: float = Field(ge=0.0, le=1.0)
    n_lcc: int = Field(ge=0)
    m_lcc: int = Field(ge=0)
    components: int = Field(ge=0)

    @model_validator(mode="after")
    def check_lcc(self) -> "MetricsSnapshot":
        if self.components == 0 and self.n_lcc:
            raise ValueError("non-empty LCC in a graph without components")
        return self

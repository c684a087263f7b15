from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from netmend.core.config import settings
from netmend.schemas.attack import AttackSpec
from netmend.schemas.generator import GeneratorSpec


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    generator: GeneratorSpec | None = None
    dataset: Path | None = None
    transactions: Path | None = None
    attack: AttackSpec
    mechanism: Literal["strategic", "budget", "both"] = "both"
    budget: float | Literal["auto"] = "auto"
    seed: int
    out: Path = Path("results")
    threshold_mode: Literal["n", "n-1"] = Field(default_factory=lambda: settings.THRESHOLD_MODE)
    tiebreak: Literal["random", "deterministic"] = Field(default_factory=lambda: settings.TIEBREAK)
    tx_low: int = Field(default_factory=lambda: settings.TX_LOW, ge=0)
    tx_high: int = Field(default_factory=lambda: settings.TX_HIGH, ge=1)
    compare_random: bool = False
    repeats: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def check_source(self) -> "RunConfig":
        if (self.generator is None) == (self.dataset is None):
            raise ValueError("exactly one of a generator or a dataset must be given")
        if self.tx_high < self.tx_low:
            raise ValueError("transaction range must satisfy low <= high")
        if self.budget != "auto" and self.budget <= 0:
            raise ValueError("budget must be positive or 'auto'")
        return self

    @property
    def mechanisms(self) -> list[Literal["strategic", "budget", "random"]]:
        mechanisms = ["strategic", "budget"] if self.mechanism == "both" else [self.mechanism]
        if self.compare_random:
            mechanisms.append("random")
        return mechanisms

    def with_seed(self, seed: int, out: Path) -> "RunConfig":
        """Same run for another seed, written to ``out``."""
        generator = self.generator.model_copy(update={"seed": seed}) if self.generator else None
        attack = self.attack.model_copy(update={"seed": seed})
        return self.model_copy(
            update={"seed": seed, "out": out, "generator": generator, "attack": attack, "repeats": 1}
        )

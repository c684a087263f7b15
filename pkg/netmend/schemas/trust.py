import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class TransactionMatrices(BaseModel):
    """Symmetric success (s) and failure (f) tallies, zero on the diagonal."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    successes: np.ndarray
    failures: np.ndarray

    @field_validator("successes", "failures")
    @classmethod
    def check_matrix(cls, v: np.ndarray) -> np.ndarray:
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValueError("transaction matrix must be square")
        if (v < 0).any():
            raise ValueError("transaction counts must be non-negative")
        if not np.array_equal(v, v.T):
            raise ValueError("transaction matrix must be symmetric")
        if np.diagonal(v).any():
            raise ValueError("transaction matrix must have a zero diagonal")
        return v

    @model_validator(mode="after")
    def check_shapes(self) -> "TransactionMatrices":
        if self.successes.shape != self.failures.shape:
            raise ValueError("success and failure matrices differ in shape")
        return self

    @property
    def node_count(self) -> int:
        return self.successes.shape[0]


class TrustProfile(BaseModel):
    model_config = ConfigDict(frozen=True)

    psi: list[int]
    eta: list[int]
    phi: list[float]

    @model_validator(mode="after")
    def check_profile(self) -> "TrustProfile":
        if not len(self.psi) == len(self.eta) == len(self.phi):
            raise ValueError("psi, eta and phi must cover the same nodes")
        if any(not 0.0 <= value <= 1.0 for value in self.phi):
            raise ValueError("trust values must lie in [0, 1]")
        return self

    @property
    def node_count(self) -> int:
        return len(self.phi)

    @classmethod
    def uniform(cls, n: int, value: float) -> "TrustProfile":
        """Profile where every node has the same trust and no transactions."""
        return cls(psi=[0] * n, eta=[0] * n, phi=[value] * n)

"""Pydantic report records for the matrix side."""

from pydantic import BaseModel, Field


class PingPongViolation(BaseModel):
    """A factor of ``E_delta`` that left a vector of ``Omega_delta'`` outside ``Omega_delta``."""

    factor: str = Field(description="The factor, e.g. 'E(0:1)(t + 1)'")
    vector: str = Field(description="The input vector as '(v1 ; v2)'")
    vector_line: str = Field(description="Line of the input vector's highest component")
    image_hc: str = Field(description="Highest component of the image")


class PingPongReport(BaseModel):
    """Outcome of the ping-pong check ``E*_delta . Omega_delta' ⊂ Omega_delta``."""

    checked: int = Field(description="Factor/vector pairs on distinct lines that were tested")
    skipped: int = Field(description="Pairs on the same line, which the check excludes")
    violations: list[PingPongViolation] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

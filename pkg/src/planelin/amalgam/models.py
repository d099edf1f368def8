"""Pydantic report records for the amalgam engine."""

from pydantic import BaseModel, Field


class SubamalgamViolation(BaseModel):
    """An element of ``A`` reached from one subgroup but not the other."""

    found_in: int = Field(description="Subgroup (1 or 2) whose enumeration reached the element")
    element: str = Field(description="Text form of the element")
    word: list[str] = Field(description="Generator letters spelling the element")


class SubamalgamReport(BaseModel):
    """Bounded comparison of ``G1' ∩ A`` and ``G2' ∩ A``.

    An empty ``violations`` list means no counterexample up to ``bound``;
    it is not a proof of the intersection condition.
    """

    bound: int = Field(description="Maximal word length enumerated on each side")
    enumerated: tuple[int, int] = Field(description="Distinct elements reached in G1' and G2'")
    in_a: tuple[int, int] = Field(description="How many of them lie in A")
    violations: list[SubamalgamViolation] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

"""Pydantic report records for the witness suites."""

from typing import Any

from pydantic import BaseModel, Field


class RelationCheck(BaseModel):
    name: str = Field(description="The identity being checked")
    passed: bool
    lhs: str = Field(description="Left-hand side as text")
    rhs: str = Field(description="Right-hand side as text")


class RelationReport(BaseModel):
    """Exact checks of polynomial or matrix identities."""

    checks: list[RelationCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class Collision(BaseModel):
    """Two distinct normal forms with the same automorphism."""

    first: list[str]
    second: list[str]
    automorphism: str


class DistinctnessReport(BaseModel):
    """Injectivity of normal forms of the abstract group into automorphisms."""

    length_bound: int = Field(description="Maximal letter length of enumerated words")
    explored: int = Field(description="Letter extensions explored by the search")
    normal_forms: int = Field(description="Distinct normal forms among them")
    collisions: list[Collision] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.collisions


class CornulierCase(BaseModel):
    f: str = Field(description="Binomial-basis coefficients a_0, a_1, ...")
    alpha: str
    passed: bool


class CornulierReport(BaseModel):
    """The conjugation identity of the square-zero representation over a grid."""

    cases: list[CornulierCase] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)


class SuiteResult(BaseModel):
    """Outcome of one named witness suite."""

    suite: str
    passed: bool
    reports: dict[str, Any] = Field(
        default_factory=dict, description="Component reports, as plain JSON data"
    )

"""Pydantic records for classifications and hypothesis screens."""

from enum import StrEnum

from pydantic import BaseModel, Field, model_validator


class Classification(BaseModel):
    """Reducibility and (quasi-)unipotence of an invertible 2x2 matrix."""

    k_reducible: bool = Field(description="Eigenvalues lie in the base field")
    unipotent: bool = Field(description="Both eigenvalues equal 1")
    quasi_unipotent: bool = Field(description="Some positive power is unipotent")
    quasi_order: int | None = Field(
        default=None, description="Smallest n > 0 with M^n unipotent, if any"
    )

    @model_validator(mode="after")
    def _consistent(self) -> "Classification":
        if self.unipotent and self.quasi_order != 1:
            raise ValueError("A unipotent matrix has quasi-order 1")
        if self.quasi_unipotent != (self.quasi_order is not None):
            raise ValueError("quasi_order is set exactly for quasi-unipotent matrices")
        return self


class Hypothesis(StrEnum):
    UNIPOTENT = "U"
    QUASI_UNIPOTENT = "QU"


class HypothesisVerdict(BaseModel):
    """First counterexample to a reducibility hypothesis, searched up to a word bound.

    ``counterexample is None`` means none was found; it is not a proof.
    """

    hypothesis: Hypothesis
    word_bound: int
    elements_checked: int
    counterexample: str | None = Field(default=None, description="Offending matrix")
    word: list[str] | None = Field(default=None, description="Generator letters spelling it")

    @property
    def holds(self) -> bool:
        return self.counterexample is None


class DegreeLawResult(BaseModel):
    """Degrees of a tau word and of its image matrix."""

    aut_degree: int = Field(description="Degree of the automorphism")
    matrix_degree: int = Field(description="Degree of its image in GL_1(2, K[t])")
    factor_degrees: list[int] = Field(description="Degrees of the tau polynomials")

"""Polynomial matrices: ``GL_1(2, K[t])``, its free generators and ping-pong."""

from planelin.matpoly.generation import (
    EFactor,
    EWord,
    bracket,
    e_generation_factorize,
    generation_steps,
    is_in_GL1,
    merge_efactors,
)
from planelin.matpoly.models import PingPongReport, PingPongViolation
from planelin.matpoly.pingpong import (
    PolyVector,
    apply_factor,
    omega_member,
    pingpong_grid,
    vector_degree,
    vector_hc,
    verify_pingpong,
)

__all__ = [
    "EFactor",
    "EWord",
    "PingPongReport",
    "PingPongViolation",
    "PolyVector",
    "apply_factor",
    "bracket",
    "e_generation_factorize",
    "generation_steps",
    "is_in_GL1",
    "merge_efactors",
    "omega_member",
    "pingpong_grid",
    "vector_degree",
    "vector_hc",
    "verify_pingpong",
]

"""The isomorphism ``psi: Aut_1 K^2 -> GL_1(2, K[t])`` and its inverse.

On generators ``psi(tau_delta(f)) = id + (f / t) e_delta``; the inverse sends
the factor ``id + t f e_delta`` to ``tau_delta(t^2 f)``.
"""

from __future__ import annotations

from planelin.errors import LawViolation
from planelin.exactalg import MatPoly2
from planelin.freefactor import TauFactor, TauWord, free_factorize
from planelin.linmap.models import DegreeLawResult
from planelin.matpoly import EFactor, e_generation_factorize
from planelin.planeaut import PolyAut, compose_all


def psi_factor(factor: TauFactor) -> MatPoly2:
    """``id + (f / t) e_delta``, written as the E-factor of ``f / t^2``."""
    return EFactor(factor.delta, factor.f.shift_down(2)).matrix()


def psi_word(word: TauWord) -> MatPoly2:
    acc = MatPoly2.identity(word.field)
    for factor in word.factors:
        acc = acc * psi_factor(factor)
    return acc


def psi(phi: PolyAut) -> MatPoly2:
    """Raises :class:`~planelin.errors.NotInAut1` outside ``Aut_1``."""
    return psi_word(free_factorize(phi))


def psi_inv(g: MatPoly2) -> PolyAut:
    """Raises :class:`~planelin.errors.NotInGL1` outside ``GL_1(2, K[t])``."""
    word = e_generation_factorize(g)
    taus = [TauFactor(e.delta, e.f.shift_up(2)).to_polyaut() for e in word.factors]
    return compose_all(taus, g.field)


def degree_law_check(word: TauWord) -> DegreeLawResult:
    """Check ``deg sigma = prod m_i`` and ``deg psi(sigma) = sum m_i - n``."""
    degrees = [factor.degree for factor in word.factors]
    aut_degree = word.recompose().degree
    matrix_degree = max(psi_word(word).degree, 0)
    if aut_degree != word.degree_product:
        raise LawViolation(f"Degree {aut_degree} differs from the product of {degrees}")
    if matrix_degree != sum(degrees) - len(degrees):
        raise LawViolation(
            f"Matrix degree {matrix_degree} differs from sum of {degrees} minus {len(degrees)}"
        )
    return DegreeLawResult(
        aut_degree=aut_degree, matrix_degree=matrix_degree, factor_degrees=degrees
    )

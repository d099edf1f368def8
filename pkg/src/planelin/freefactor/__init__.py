"""Free product decomposition of ``Aut_1 K^2``."""

from planelin.freefactor.factorize import free_factorize
from planelin.freefactor.tau import TauFactor, TauWord, conjugate_tau, merge, tau

__all__ = ["TauFactor", "TauWord", "conjugate_tau", "free_factorize", "merge", "tau"]

"""Exact rho-functions and the tempered / square-integrable trichotomy for pairs (g, h)."""

from .embedding import AlgebraSpec, EmbeddingSpec, FactorSpec
from .grammar import parse_pair
from .rho import Verdict, VerdictKind, decide

__version__ = "0.1.0"

__all__ = ["AlgebraSpec", "EmbeddingSpec", "FactorSpec", "Verdict", "VerdictKind", "decide", "parse_pair"]

"""Real double Hurwitz numbers with 3-cycles: factorization counts, tropical covers
and the enhanced lower bound."""
__version__ = "0.1.0"

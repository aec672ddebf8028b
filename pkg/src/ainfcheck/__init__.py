"""ainfcheck: exact verification of A-infinity categorical identities on
finite examples (Stasheff identities, functor and transformation equations,
bimodule flatness, duality, Serre structures and the Yoneda embedding)."""

__version__ = "0.1.0"

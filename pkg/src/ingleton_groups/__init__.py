"""Group-theoretic search and verification of Ingleton-violating subgroup tuples."""

__version__ = "0.1.0"

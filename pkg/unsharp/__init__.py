"""Finite effect algebras, unsharp implications, tense operators and induced time frames."""

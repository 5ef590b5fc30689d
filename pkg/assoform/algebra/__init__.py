"""Apolarity, quotient algebras, resultants and the associated form map."""

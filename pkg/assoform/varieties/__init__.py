"""Catalecticant varieties and the binary and ternary specializations."""

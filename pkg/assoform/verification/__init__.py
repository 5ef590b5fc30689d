"""Seeded sampling, verification suites and their report."""

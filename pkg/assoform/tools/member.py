"""Membership tool."""

from typing import Any, Dict

from ..core.polyring import Side
from ..core.textio import parse_form
from ..varieties.catvar import certify
from .formatter import ResultFormatter


def compute_membership(text: str, n: int, d: int) -> Dict[str, Any]:
    """Certificate for a y-side form of degree n(d-1)."""
    F = parse_form(text, Side.Y, n, expected_degree=n * (d - 1))
    return certify(F).to_dict()


async def membership(form: str, n: int, d: int) -> str:
    """Decide membership of a form in V, U, Gor(T), Z and U_Res.

    Args:
        form: y-side form of degree n(d-1)
        n: Number of variables
        d: Degree of the tuples whose associated forms are considered

    Returns:
        Formatted certificate as markdown
    """
    return ResultFormatter.format_certificate(compute_membership(form, n, d))

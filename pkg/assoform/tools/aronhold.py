"""Aronhold invariant tool."""

from typing import Any, Dict

from ..core.polyring import Side
from ..core.textio import parse_form, render_form, render_scalar
from ..varieties.ternary import aronhold_of_form, in_image_ternary
from .formatter import ResultFormatter


def compute_aronhold(text: str) -> Dict[str, Any]:
    cubic = parse_form(text, Side.Y, 3, expected_degree=3)
    return {
        "form": render_form(cubic),
        "S": render_scalar(aronhold_of_form(cubic)),
        "in_image": in_image_ternary(cubic),
    }


async def aronhold(form: str) -> str:
    """Evaluate S on a ternary cubic in y1, y2, y3 and decide whether it is an associated form.

    Args:
        form: Ternary cubic

    Returns:
        One markdown line with S and the verdict
    """
    return ResultFormatter.format_aronhold(compute_aronhold(form))

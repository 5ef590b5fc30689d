"""Tuple recovery tool."""

from typing import Any, Dict

from ..algebra.assocform import associated_form_tuple
from ..core.polyring import Side
from ..core.textio import parse_form, render_form, render_scalar
from ..varieties.catvar import proportional, recover_tuple as _recover
from .formatter import ResultFormatter


def compute_recovery(text: str, n: int, d: int, normalize: bool = False) -> Dict[str, Any]:
    """A tuple f with A(f) proportional to F (equal when ``normalize``)."""
    F = parse_form(text, Side.Y, n, expected_degree=n * (d - 1))
    ftuple = _recover(F, normalize=normalize)
    G = associated_form_tuple(ftuple).F
    mu = proportional(G, F)
    return {
        "form": render_form(F),
        "tuple": [render_form(f) for f in ftuple],
        "associated_form": render_form(G),
        "scalar": render_scalar(mu) if mu is not None else None,
    }


async def recover_tuple(
    form: str,
    n: int,
    d: int,
    normalize: bool = False,
) -> str:
    """Invert the associated form map on a form in its image.

    Args:
        form: y-side form of degree n(d-1)
        n: Number of variables
        d: Degree of the recovered forms
        normalize: Scale the tuple so that A(f) equals the input exactly

    Returns:
        Formatted tuple as markdown
    """
    return ResultFormatter.format_recovery(compute_recovery(form, n, d, normalize))

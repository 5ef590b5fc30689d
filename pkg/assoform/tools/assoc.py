"""Associated form tool."""

import logging
from typing import Any, Dict, List

from ..algebra.assocform import associated_form as _associated_form
from ..algebra.assocform import associated_form_tuple
from ..algebra.quotalg import FormTuple
from ..core.polyring import Side
from ..core.textio import form_to_model, parse_form, parse_tuple, render_form
from ..errors import AssoformError
from ..varieties.catvar import certify
from .formatter import ResultFormatter

logger = logging.getLogger(__name__)


def compute_associated_form(texts: List[str], n: int, d: int, as_tuple: bool = False) -> Dict[str, Any]:
    """A(f) for one x-side form of degree d+1, or A(f) for a tuple of n forms of degree d.

    Args:
        texts: Form texts
        n: Number of variables
        d: Degree of the tuple entries
        as_tuple: Treat ``texts`` as the tuple (f_1, ..., f_n)

    Returns:
        JSON-ready payload with the associated form and its certificate
    """
    if as_tuple:
        ftuple = FormTuple(tuple(parse_tuple(texts, n, d)))
        result = associated_form_tuple(ftuple)
    else:
        if len(texts) != 1:
            raise AssoformError(f"expected a single form of degree {d + 1}, got {len(texts)} inputs")
        result = _associated_form(parse_form(texts[0], Side.X, n, expected_degree=d + 1))
    logger.debug("associated form %s", render_form(result.F))
    return {
        "input": list(texts),
        "associated_form": render_form(result.F),
        "form": form_to_model(result.F).model_dump(mode="json"),
        "certificate": certify(result.F).to_dict(),
    }


async def associated_form(
    forms: List[str],
    n: int,
    d: int,
    as_tuple: bool = False,
) -> str:
    """Compute an associated form.

    Args:
        forms: One form of degree d+1, or n forms of degree d when ``as_tuple``
        n: Number of variables
        d: Tuple degree
        as_tuple: Interpret ``forms`` as a tuple

    Returns:
        Formatted result as markdown
    """
    return ResultFormatter.format_associated_form(compute_associated_form(forms, n, d, as_tuple))

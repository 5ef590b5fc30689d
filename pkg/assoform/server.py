"""MCP server for associated forms using FastMCP."""

import logging
from typing import Optional

from mcp.server.fastmcp import FastMCP

from .config import Config
from .errors import AssoformError

logger = logging.getLogger(__name__)

# Global config
_config: Optional[Config] = None


def get_config() -> Config:
    """Get or create config instance."""
    global _config
    if _config is None:
        _config = Config.load()
    return _config


def _error(exc: AssoformError) -> str:
    logger.exception("tool call failed")
    return f"Error: {exc}"


# Create FastMCP server
mcp = FastMCP("assoform")


@mcp.tool()
async def associated_form(
    forms: list[str],
    n: int,
    d: int,
    as_tuple: bool = False,
) -> str:
    """Compute the associated form of a form of degree d+1 or of a tuple of n forms of degree d.

    Forms use x1..xn, e.g. 'x1^3 + x2^3 + x3^3' or the tuple ['x1^2', 'x2^2'].

    Args:
        forms: One form, or n forms when as_tuple is set
        n: Number of variables
        d: Degree of the tuple entries
        as_tuple: Interpret forms as a tuple
    """
    from .tools.assoc import associated_form as _assoc

    try:
        return await _assoc(forms, n, d, as_tuple)
    except AssoformError as exc:
        return _error(exc)


@mcp.tool()
async def membership(form: str, n: int, d: int) -> str:
    """Decide membership of a form of degree n(d-1) in the catalecticant loci and the image of A.

    Args:
        form: Form in y1..yn, e.g. 'y1^2*y3 + y2*y3^2'
        n: Number of variables
        d: Tuple degree
    """
    from .tools.member import membership as _member

    try:
        return await _member(form, n, d)
    except AssoformError as exc:
        return _error(exc)


@mcp.tool()
async def aronhold(form: str) -> str:
    """Evaluate the Aronhold invariant S of a ternary cubic in y1, y2, y3.

    Args:
        form: Ternary cubic, e.g. 'y1*y2*y3'
    """
    from .tools.aronhold import aronhold as _aronhold

    try:
        return await _aronhold(form)
    except AssoformError as exc:
        return _error(exc)


@mcp.tool()
async def recover_tuple(form: str, n: int, d: int, normalize: bool = False) -> str:
    """Find a tuple of n forms of degree d whose associated form is proportional to the input.

    Args:
        form: Form in y1..yn of degree n(d-1)
        n: Number of variables
        d: Tuple degree
        normalize: Make the associated form equal to the input
    """
    from .tools.recover import recover_tuple as _recover

    try:
        return await _recover(form, n, d, normalize)
    except AssoformError as exc:
        return _error(exc)


@mcp.tool()
async def verify(suite: str = "ternary", seed: int = 0, cases: int | None = None) -> str:
    """Run a seeded verification suite (all, ternary, roundtrip, dimension, charts, resultants).

    Args:
        suite: Suite name
        seed: Generator seed
        cases: Optional per-suite case count
    """
    from .tools.verify import verify as _verify

    config = get_config()
    return await _verify(suite, seed, cases, config)

"""Verification tool."""

import json
import logging
from typing import Optional

from ..config import Config
from ..verification.suites import SUITES, run_verification
from .formatter import ResultFormatter

logger = logging.getLogger(__name__)


async def verify(
    suite: str = "ternary",
    seed: int = 0,
    cases: Optional[int] = None,
    config: Optional[Config] = None,
) -> str:
    """Run a seeded verification suite.

    Args:
        suite: One of the suite names or "all"
        seed: Generator seed
        cases: Override for per-suite case counts
        config: Configuration object

    Returns:
        Formatted report as markdown
    """
    if config is None:
        config = Config.load()
    if suite != "all" and suite not in SUITES:
        return f"Unknown suite '{suite}'. Choose one of: all, {', '.join(SUITES)}."

    report = run_verification(suite, config.with_overrides(seed=seed, cases=cases))
    logger.debug("verification %s finished: %s", suite, report.passed)
    return ResultFormatter.format_report(json.loads(report.to_json()))

"""Seeded verification suites.

Each suite draws from its own generator seeded with the run seed, so running
one suite alone reproduces its part of ``all``. A suite stops at its first
counterexample.
"""

import logging
import time
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from ..algebra.apolar import annihilator_piece, gorenstein_sequence, span_equal
from ..algebra.assocform import associated_form_tuple, differential_rank, expected_dimension
from ..algebra.quotalg import FormTuple, expected_hilbert_function
from ..algebra.resultant import macaulay_resultant, resultant_nonvanishing, sylvester_resultant
from ..config import Config
from ..core.polyring import GradedForm, Side
from ..core.textio import render_form, render_scalar
from ..errors import GenericityFailure, VerificationFailure
from ..varieties import ternary
from ..varieties.catvar import (
    chart_resultant_nonzero, in_U, in_Z, iter_charts, proportional, recover_tuple,
)
from .report import SuiteResult, VerifyReport
from .sampler import (
    degenerate_tuple, inverse_transpose, make_rng, random_form, random_invertible_matrix,
    random_tuple, sample_good_tuple,
)

logger = logging.getLogger(__name__)

Progress = Optional[Callable[[str], None]]

SUITES = ("ternary", "roundtrip", "dimension", "charts", "resultants")


def _require(condition: bool, message: str, **counterexample) -> None:
    if not condition:
        raise VerificationFailure(message, counterexample)


def _tuple_text(ftuple: FormTuple) -> List[str]:
    return [render_form(f) for f in ftuple]


def _grid(config: Config, grid: List[Tuple[int, int]], pinned: bool) -> List[Tuple[int, int]]:
    return [(config.run.n, config.run.d)] if pinned else list(grid)


def _count(config: Config, default: int) -> int:
    return config.run.cases if config.run.cases is not None else default


# ----------------------------------------------------------------------
# Suites
# ----------------------------------------------------------------------

def suite_ternary(config: Config, rng: np.random.Generator, result: SuiteResult) -> None:
    """Aronhold partition, annihilator tables, Hesse pencil and S versus U_Res."""
    cases = ternary.check_partition() + ternary.check_annihilator_tables() + ternary.check_hesse_pencil()
    count = _count(config, config.verify.ternary_random)
    cubics = [random_form(rng, Side.Y, 3, 3, config.run.height) for _ in range(count)]
    cubics += ternary.degenerate_orbit_samples(rng, max(1, count // 10))
    cases += ternary.check_random_agreement(cubics)
    cases += ternary.check_sl3_invariance(cubics[:_count(config, config.verify.sl3_cases)], rng)
    result.cases = len(cases)
    grouped: Dict[str, List[Dict[str, Any]]] = {}
    for c in cases:
        grouped.setdefault(c.check, []).append({"subject": c.subject, "passed": c.passed, **c.detail})
    result.details["cases"] = grouped
    result.details["S"] = {
        c.subject: c.detail["S"] for c in cases if c.check == "partition"
    }
    result.details["hesse_scalars"] = {
        c.subject: c.detail["scalar"] for c in cases if c.check == "hesse_pencil"
    }


def suite_roundtrip(config: Config, rng: np.random.Generator, result: SuiteResult,
                    pinned: bool = False) -> None:
    """Inverse system, Gorenstein sequence and recovery for random tuples."""
    count = _count(config, config.verify.roundtrip_cases)
    for n, d in _grid(config, config.verify.roundtrip_grid, pinned):
        target = expected_hilbert_function(n, d)
        for k in range(count):
            ftuple = sample_good_tuple(rng, n, d, config.run.height, config.sampling.max_attempts)
            F = associated_form_tuple(ftuple).F
            where = {"n": n, "d": d, "case": k, "tuple": _tuple_text(ftuple), "F": render_form(F)}
            _require(gorenstein_sequence(F) == target, "Gorenstein sequence differs from T", **where)
            _require(span_equal(annihilator_piece(F, d), list(ftuple), n=n, degree=d),
                     "annihilator of A(f) in degree d is not spanned by f", **where)
            recovered = recover_tuple(F)
            _require(span_equal(list(recovered), list(ftuple), n=n, degree=d),
                     "recovered tuple spans a different space", **where)
            _require(proportional(associated_form_tuple(recovered).F, F) is not None,
                     "A(recovered tuple) is not proportional to F", **where)
            result.cases += 1
        logger.debug("roundtrip (%d,%d): %d cases", n, d, count)


def suite_dimension(config: Config, rng: np.random.Generator, result: SuiteResult,
                    pinned: bool = False) -> None:
    """Rank of the differential of A against K*n - n^2 + 1."""
    ranks: Dict[str, Dict[str, int]] = {}
    for n, d in _grid(config, config.verify.dimension_grid, pinned):
        ftuple = sample_good_tuple(rng, n, d, config.run.height, config.sampling.max_attempts)
        got, expected = differential_rank(ftuple), expected_dimension(n, d)
        ranks[f"{n},{d}"] = {"rank": got, "expected": expected}
        _require(got == expected, "differential rank differs from the dimension formula",
                 n=n, d=d, tuple=_tuple_text(ftuple), rank=got, expected=expected)
        result.cases += 1
    result.details["differential_rank"] = ranks


def _interleave(first: List[GradedForm], second: List[GradedForm]) -> List[GradedForm]:
    """first[0], second[0], first[1], ... with the longer tail appended."""
    out: List[GradedForm] = []
    for k in range(max(len(first), len(second))):
        out.extend(seq[k] for seq in (first, second) if k < len(seq))
    return out


def suite_charts(config: Config, rng: np.random.Generator, result: SuiteResult) -> None:
    """Chart independence of Z, GL-invariance of Z, and the annihilator transform rule.

    The GL and transform checks walk the degenerate orbit samples interleaved
    with the random cubics, so members of Z are covered at any case count.
    """
    n, d = 3, 2
    height = config.run.height
    randoms = [random_form(rng, Side.Y, n, n * (d - 1), height)
               for _ in range(_count(config, config.verify.chart_cases))]
    degenerate = ternary.degenerate_orbit_samples(rng, max(1, len(randoms) // 5))
    pool = randoms + degenerate
    compared = 0
    for F in pool:
        if not in_U(F):
            continue
        charts = []
        for chart in iter_charts(F):
            charts.append(chart)
            if len(charts) == 2:
                break
        if len(charts) < 2:
            continue
        first, second = (chart_resultant_nonzero(F, c) for c in charts)
        _require(first == second, "Z verdict depends on the chart", F=render_form(F),
                 charts=[c.to_dict() for c in charts])
        compared += 1
    result.details["multi_chart_forms"] = compared

    ordered = _interleave(degenerate, randoms)
    gl = {"forms": 0, "in_Z": 0}
    for F in ordered[:_count(config, config.verify.gl_cases)]:
        if not in_U(F):
            continue
        C = random_invertible_matrix(rng, n)
        G = F.substitute(C)
        member = in_Z(F)
        _require(in_U(G) and member == in_Z(G), "Z is not GL-invariant",
                 F=render_form(F), matrix=[[render_scalar(x) for x in r] for r in C])
        gl["forms"] += 1
        gl["in_Z"] += int(member)
        compared += 1
    result.details["gl_invariance"] = gl

    transform = {"forms": 0, "in_Z": 0}
    for F in ordered[:_count(config, config.verify.transform_cases)]:
        C = random_invertible_matrix(rng, n)
        moved = annihilator_piece(F.substitute(C), d)
        expected = [h.substitute(inverse_transpose(C)) for h in annihilator_piece(F, d)]
        _require(span_equal(moved, expected, n=n, degree=d),
                 "annihilator does not transform by the inverse transpose",
                 F=render_form(F), matrix=[[render_scalar(x) for x in r] for r in C])
        transform["forms"] += 1
        transform["in_Z"] += int(in_U(F) and in_Z(F))
        compared += 1
    result.details["annihilator_transform"] = transform
    result.cases = compared


def suite_resultants(config: Config, rng: np.random.Generator, result: SuiteResult) -> None:
    """Finite colength against Sylvester and Macaulay resultants."""
    height = config.run.height
    pairs = _count(config, config.verify.binary_pairs)
    for k in range(pairs):
        d = 2 + k % 3
        ftuple = degenerate_tuple(rng, 2, d, height) if k % 5 == 0 else random_tuple(rng, 2, d, height)
        value = sylvester_resultant(ftuple[0], ftuple[1])
        _require((value != 0) == resultant_nonvanishing(ftuple), "Sylvester resultant disagrees",
                 tuple=_tuple_text(ftuple), value=render_scalar(value))
        result.cases += 1

    triples = _count(config, config.verify.ternary_triples)
    degenerate = min(triples, config.verify.degenerate_triples)
    for k in range(triples):
        ftuple = degenerate_tuple(rng, 3, 2, height) if k < degenerate else random_tuple(rng, 3, 2, height)
        try:
            report = macaulay_resultant(ftuple, rng, config.sampling.macaulay_retries)
        except GenericityFailure as exc:
            raise VerificationFailure(str(exc), {"tuple": _tuple_text(ftuple)}) from exc
        _require(report.nonvanishing == resultant_nonvanishing(ftuple), "Macaulay resultant disagrees",
                 tuple=_tuple_text(ftuple), value=render_scalar(report.value or Fraction(0)))
        result.cases += 1


# ----------------------------------------------------------------------
# Runner
# ----------------------------------------------------------------------

def run_suite(name: str, config: Config, pinned: bool = False) -> SuiteResult:
    """Run one suite on a generator seeded with the run seed."""
    rng = make_rng(config.run.seed)
    result = SuiteResult(name=name)
    start = time.perf_counter()
    try:
        if name == "ternary":
            suite_ternary(config, rng, result)
        elif name == "roundtrip":
            suite_roundtrip(config, rng, result, pinned)
        elif name == "dimension":
            suite_dimension(config, rng, result, pinned)
        elif name == "charts":
            suite_charts(config, rng, result)
        elif name == "resultants":
            suite_resultants(config, rng, result)
        else:
            raise ValueError(f"unknown suite {name!r}")
    except VerificationFailure as exc:
        logger.debug("suite %s failed: %s", name, exc)
        result.passed = False
        result.message = str(exc)
        result.counterexample = exc.counterexample
    result.seconds = round(time.perf_counter() - start, 3)
    return result


def run_verification(suite: str, config: Config, pinned: bool = False,
                     progress: Progress = None) -> VerifyReport:
    """Run ``suite`` (or every suite for ``all``) and collect a report.

    Args:
        suite: A name from SUITES or ``all``
        config: Run configuration
        pinned: Use the run's (n, d) instead of the configured grids
        progress: Optional callback receiving one line per finished suite
    """
    names = SUITES if suite == "all" else (suite,)
    report = VerifyReport(suite=suite, seed=config.run.seed,
                          n=config.run.n if pinned else None, d=config.run.d if pinned else None)
    for name in names:
        result = run_suite(name, config, pinned)
        report.suites.append(result)
        if progress:
            status = "pass" if result.passed else "FAIL"
            progress(f"{name}: {status} ({result.cases} cases, {result.seconds:.2f}s)")
    return report

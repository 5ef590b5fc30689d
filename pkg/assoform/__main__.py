"""CLI entry point for assoform."""

import sys


def _run_server():
    """Run MCP server directly, bypassing Click to avoid stdin/stdout interference."""
    from .server import mcp
    mcp.run(transport="stdio")


def cli():
    """Entry point - serves MCP by default, or delegates to Click CLI for other commands."""
    if len(sys.argv) <= 1 or sys.argv[1] == "serve":
        _run_server()
    else:
        _cli_group()(standalone_mode=True)


def _cli_group():
    """Build the Click CLI group with heavy imports deferred."""
    import functools
    import json
    import logging
    from pathlib import Path

    import click

    from .config import Config
    from .core.textio import iter_fixture_lines
    from .errors import AssoformError, ParseError
    from .tools.aronhold import compute_aronhold
    from .tools.assoc import compute_associated_form
    from .tools.member import compute_membership
    from .tools.recover import compute_recovery
    from .verification.suites import SUITES, run_verification

    logger = logging.getLogger(__name__)

    def run_options(func):
        """Flags shared by every computing command."""
        @click.option("--n", "n", type=int, default=None, help="Number of variables")
        @click.option("--d", "d", type=int, default=None, help="Degree of the tuple entries")
        @click.option("--seed", type=int, default=None, help="Generator seed")
        @click.option("--height", type=int, default=None, help="Coefficient bound for random forms")
        @click.option("--format", "fmt", type=click.Choice(["text", "json"]), default=None)
        @click.option("--cases", type=int, default=None, help="Per-suite case count")
        @click.pass_context
        @functools.wraps(func)
        def wrapper(ctx, n, d, seed, height, fmt, cases, **kwargs):
            base: Config = ctx.obj["config"]
            try:
                config = base.with_overrides(n=n, d=d, seed=seed, height=height, format=fmt, cases=cases)
            except ValueError as exc:
                raise click.BadParameter(str(exc)) from exc
            pinned = n is not None or d is not None
            try:
                return func(config=config, pinned=pinned, **kwargs)
            except ParseError as exc:
                click.echo(f"parse error: {exc}", err=True)
                if exc.text:
                    click.echo(f"  {exc.text}\n  {' ' * exc.position}^", err=True)
                ctx.exit(exc.exit_code)
            except AssoformError as exc:
                logger.debug("command failed", exc_info=True)
                click.echo(f"error: {exc}", err=True)
                ctx.exit(exc.exit_code)
        return wrapper

    def read_inputs(values):
        if values and values != ("-",):
            return list(values)
        return list(iter_fixture_lines(click.get_text_stream("stdin")))

    def read_one(form):
        inputs = read_inputs((form,) if form else ())
        if not inputs:
            raise click.UsageError("no form given on the command line or stdin")
        return inputs[0]

    def emit(config: Config, payload, text_lines):
        if config.run.format == "json":
            click.echo(json.dumps(payload, indent=2))
        else:
            for line in text_lines:
                click.echo(line)

    def flag(value) -> str:
        return "true" if value else "false"

    def certificate_lines(cert):
        lines = [f"rank D(F): {cert['rank_D']}"]
        if cert["gorenstein_seq"] is not None:
            lines.append("Gorenstein sequence: " + " ".join(str(t) for t in cert["gorenstein_seq"]))
        labels = {"V": "V", "U": "U", "GorT": "Gor(T)", "Z": "Z", "U_Res": "U_Res"}
        lines.extend(f"{label}: {flag(cert['verdicts'][key])}" for key, label in labels.items())
        return lines

    @click.group()
    @click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr")
    @click.option("--config", "config_path", type=click.Path(path_type=Path), default=None,
                  help="YAML configuration file (default: ./assoform.yaml)")
    @click.pass_context
    def _cli(ctx, verbose: bool, config_path):
        """Associated forms, catalecticant varieties and the Aronhold invariant."""
        logging.basicConfig(
            level=logging.DEBUG if verbose else logging.WARNING,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )
        ctx.ensure_object(dict)
        ctx.obj["config"] = Config.load(config_path)

    @_cli.command()
    @click.argument("forms", nargs=-1)
    @click.option("--tuple", "as_tuple", is_flag=True, help="Inputs are the n forms of a tuple")
    @run_options
    def assoc(forms, as_tuple: bool, config: Config, pinned: bool):
        """Associated form of a form of degree d+1 or of a tuple of degree-d forms."""
        payload = compute_associated_form(read_inputs(forms), config.run.n, config.run.d, as_tuple)
        emit(config, payload, [payload["associated_form"]] + certificate_lines(payload["certificate"]))

    @_cli.command()
    @click.argument("form", required=False)
    @run_options
    def member(form, config: Config, pinned: bool):
        """Membership certificate of a form of degree n(d-1)."""
        payload = compute_membership(read_one(form), config.run.n, config.run.d)
        emit(config, payload, certificate_lines(payload))

    @_cli.command()
    @click.argument("form", required=False)
    @run_options
    def aronhold(form, config: Config, pinned: bool):
        """Aronhold invariant S of a ternary cubic."""
        payload = compute_aronhold(read_one(form))
        emit(config, payload, [payload["S"], f"in-image: {flag(payload['in_image'])}"])

    @_cli.command()
    @click.argument("form", required=False)
    @click.option("--normalize", is_flag=True, help="Scale the tuple so that A(f) equals the input")
    @run_options
    def recover(form, normalize: bool, config: Config, pinned: bool):
        """A tuple whose associated form is proportional to FORM."""
        payload = compute_recovery(read_one(form), config.run.n, config.run.d, normalize)
        emit(config, payload, payload["tuple"])

    @_cli.command()
    @click.argument("suite", type=click.Choice(("all",) + SUITES), default="all")
    @click.option("--report", "report_path", type=click.Path(path_type=Path), default=None,
                  help="Also write the report with timings to this file")
    @run_options
    def verify(suite: str, report_path, config: Config, pinned: bool):
        """Run seeded verification suites; exit 1 on the first counterexample."""
        report = run_verification(suite, config, pinned, progress=lambda line: click.echo(line, err=True))
        if report_path is not None:
            report_path.write_text(report.to_json(timings=True), encoding="utf-8")
        if config.run.format == "json":
            click.echo(report.to_json(timings=False))
        else:
            for s in report.suites:
                click.echo(f"{s.name}: {'pass' if s.passed else 'FAIL'} ({s.cases} cases)")
                rank_details = s.details.get("differential_rank", {})
                for key, value in rank_details.items():
                    click.echo(f"  differential rank ({key}): {value['rank']} (expected {value['expected']})")
        failure = report.first_failure()
        if failure is not None:
            click.echo(f"counterexample in {failure.name}: {failure.message}", err=True)
            click.echo(json.dumps(failure.counterexample, indent=2), err=True)
            sys.exit(1)

    @_cli.command()
    def serve():
        """Start MCP server on stdio."""
        _run_server()

    return _cli


if __name__ == "__main__":
    cli()

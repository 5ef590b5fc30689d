"""Format tool results compactly."""

from typing import Any, Dict


def _flag(value: Any) -> str:
    if value is None:
        return "n/a"
    return "yes" if value else "no"


class ResultFormatter:
    """Format results as compact markdown for MCP clients."""

    @staticmethod
    def format_certificate(cert: Dict[str, Any]) -> str:
        """Format a membership certificate.

        Args:
            cert: Output of ``MembershipCertificate.to_dict``

        Returns:
            Formatted markdown string
        """
        lines = [f"**F:** `{cert['F']}` (n={cert['n']}, d={cert['d']})", ""]
        lines.append(f"- rank D(F): {cert['rank_D']} (kernel dimension {cert['kernel_dim']})")
        if cert.get("gorenstein_seq") is not None:
            lines.append(f"- Gorenstein sequence: {tuple(cert['gorenstein_seq'])}")
        if cert.get("chart"):
            chart = cert["chart"]
            lines.append(f"- Chart: rows {chart['row_subset']}, columns {chart['col_subset']}")
            lines.append(f"- Chart resultant nonzero: {_flag(cert['chart_resultant_nonzero'])}")
        lines.append("")
        lines.append("| V | U | Gor(T) | Z | U_Res |")
        lines.append("|---|---|--------|---|-------|")
        v = cert["verdicts"]
        lines.append(f"| {_flag(v['V'])} | {_flag(v['U'])} | {_flag(v['GorT'])} | "
                     f"{_flag(v['Z'])} | {_flag(v['U_Res'])} |")
        return "\n".join(lines)

    @staticmethod
    def format_associated_form(payload: Dict[str, Any]) -> str:
        lines = ["## Associated form", ""]
        lines.append("**Input:** " + ", ".join(f"`{t}`" for t in payload["input"]))
        lines.append("")
        lines.append(f"**A:** `{payload['associated_form']}`")
        lines.append("")
        lines.append(ResultFormatter.format_certificate(payload["certificate"]))
        return "\n".join(lines)

    @staticmethod
    def format_aronhold(payload: Dict[str, Any]) -> str:
        verdict = "in the image of A" if payload["in_image"] else "outside the image of A (S = 0)"
        return f"**S(`{payload['form']}`)** = {payload['S']}, {verdict}"

    @staticmethod
    def format_recovery(payload: Dict[str, Any]) -> str:
        lines = ["## Recovered tuple", ""]
        for i, text in enumerate(payload["tuple"], 1):
            lines.append(f"- f{i} = `{text}`")
        lines.append("")
        lines.append(f"**A(f):** `{payload['associated_form']}`")
        if payload.get("scalar") is not None:
            lines.append(f"**F = {payload['scalar']} · A(f)**")
        return "\n".join(lines)

    @staticmethod
    def format_report(report: Dict[str, Any]) -> str:
        """Format a verification report, one row per suite."""
        status = "PASS" if report["passed"] else "FAIL"
        lines = [f"## Verification {report['suite']} (seed {report['seed']}): {status}", ""]
        lines.append("| Suite | Result | Cases | Seconds |")
        lines.append("|-------|--------|-------|---------|")
        for s in report["suites"]:
            lines.append(f"| {s['name']} | {'pass' if s['passed'] else 'FAIL'} | {s['cases']} | "
                         f"{s.get('seconds', 0):.2f} |")
        for s in report["suites"]:
            if not s["passed"]:
                lines.append("")
                lines.append(f"**{s['name']}:** {s['message']}")
                for key, value in (s.get("counterexample") or {}).items():
                    lines.append(f"- {key}: `{value}`")
        return "\n".join(lines)

"""Campaign records and their text and JSON Lines renderings.

The machine report holds one record per Theorem A case, one per lemma instance and a
closing summary; keys are written in a fixed order and timing is left out, so two runs
with the same corpus, options and seed produce byte-identical files.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from ..structure import PPower


CaseStatus = Literal["verified", "violated", "sharpness", "hypothesis-failed"]
InstanceStatus = Literal["verified", "hypothesis-failed", "violated"]
ReportFormat = Literal["text", "jsonl"]

CASE_STATUSES: tuple[CaseStatus, ...] = ("verified", "violated", "sharpness", "hypothesis-failed")
SIZE_CONDITIONS = ("d=p", "d<=|P&Op'p|/p", "d^2<=|P|")


def classify_case(size_conditions: tuple[str, ...], hyp1: bool, hyp2: bool | None, conclusion: bool) -> CaseStatus:
    """Status of a Theorem A case.

    ``violated`` when some size condition and both hypotheses hold but the group is not
    ``p``-supersoluble; ``sharpness`` when hypothesis (1) holds, no size condition does and
    the conclusion fails.
    """
    hypotheses = hyp1 and hyp2 is not False
    if size_conditions and hypotheses:
        return "verified" if conclusion else "violated"
    if not size_conditions and hyp1 and not conclusion:
        return "sharpness"
    return "hypothesis-failed"


@dataclass(frozen=True, slots=True)
class TheoremACase:
    """One ``(G, p, d)`` evaluation of Theorem A.

    Attributes:
        group: Corpus name of ``G``.
        order: ``|G|``.
        p: The prime.
        d: The order of the subgroups in hypothesis (1), ``1 < d < |P|``.
        size_conditions: Names (from :data:`SIZE_CONDITIONS`) of the size conditions that hold.
        hyp1: Every subgroup of ``P`` of order ``d`` satisfies the ``ℒ-Π``-property.
        hyp2_applicable: ``d = p = 2`` and ``P`` is not quaternion-free.
        hyp2: Every cyclic subgroup of ``P`` of order 4 satisfies the ``ℒ-Π``-property;
            ``None`` when not applicable.
        conclusion: ``G`` is ``p``-supersoluble.
        status: See :func:`classify_case`.
        converse: ``G`` is ``p``-supersoluble although hypothesis (1) fails (informational).
    """

    group: str
    order: int
    p: int
    d: PPower
    size_conditions: tuple[str, ...]
    hyp1: bool
    hyp2_applicable: bool
    hyp2: bool | None
    conclusion: bool
    status: CaseStatus
    converse: bool

    def __post_init__(self):
        if self.d.p != self.p or self.d.exponent < 1:
            raise ValueError(f"d = {self.d} is not a nontrivial power of {self.p}")
        if any(name not in SIZE_CONDITIONS for name in self.size_conditions):
            raise ValueError(f"unknown size condition in {self.size_conditions}")
        if (self.hyp2 is None) == self.hyp2_applicable:
            raise ValueError("hyp2 must be set exactly when applicable")
        if self.status != classify_case(self.size_conditions, self.hyp1, self.hyp2, self.conclusion):
            raise ValueError(f"status {self.status} disagrees with the evaluated fields")
        if self.converse != (self.conclusion and not self.hyp1):
            raise ValueError("converse flag disagrees with the evaluated fields")

    def record(self) -> dict[str, object]:
        return {
            "kind": "theorem-a",
            "group": self.group,
            "order": self.order,
            "p": self.p,
            "d": self.d.value,
            "size_conditions": list(self.size_conditions),
            "hyp1": self.hyp1,
            "hyp2_applicable": self.hyp2_applicable,
            "hyp2": self.hyp2,
            "conclusion": self.conclusion,
            "status": self.status,
            "converse": self.converse,
        }


@dataclass(frozen=True, slots=True)
class LemmaInstance:
    """One evaluated instance of a lemma or theorem statement.

    Attributes:
        suite: Suite name, e.g. ``lpi-join-normal``.
        group: Corpus name of the ambient group.
        instance: Parameters of the instance, rendered as text.
        status: Outcome of the implication.
    """

    suite: str
    group: str
    instance: str
    status: InstanceStatus

    def record(self) -> dict[str, object]:
        return {
            "kind": "lemma",
            "suite": self.suite,
            "group": self.group,
            "instance": self.instance,
            "status": self.status,
        }


@dataclass(frozen=True, slots=True)
class LemmaResult:
    """Per-suite totals."""

    suite: str
    trials: int
    verified: int
    hypothesis_failed: int
    violated: int
    first_counterexample: str | None

    def __post_init__(self):
        if self.trials != self.verified + self.hypothesis_failed + self.violated:
            raise ValueError("trials do not add up")

    def record(self) -> dict[str, object]:
        return {
            "trials": self.trials,
            "verified": self.verified,
            "hypothesis_failed": self.hypothesis_failed,
            "violated": self.violated,
            "first_counterexample": self.first_counterexample,
        }


@dataclass(frozen=True, slots=True)
class SkippedGroup:
    group: str
    reason: str


@dataclass(frozen=True, slots=True)
class CampaignReport:
    """Everything one campaign produced, in corpus order.

    Attributes:
        groups: Corpus names that were scheduled.
        cases: Theorem A cases.
        instances: Lemma and theorem-suite instances.
        skipped: Corpus members that hit a cap.
        suites: Suites that were run, in run order.
        elapsed: Wall-clock seconds; text report only.
    """

    groups: tuple[str, ...] = ()
    cases: tuple[TheoremACase, ...] = ()
    instances: tuple[LemmaInstance, ...] = ()
    skipped: tuple[SkippedGroup, ...] = ()
    suites: tuple[str, ...] = ()
    elapsed: float = 0.0

    def results(self) -> list[LemmaResult]:
        """Totals for every lemma suite that was run, including suites with no instances."""
        results: list[LemmaResult] = []
        for suite in self.suites:
            if suite == "theorem-a":
                continue
            mine = [instance for instance in self.instances if instance.suite == suite]
            counts = Counter(instance.status for instance in mine)
            first = next((f"{i.group}: {i.instance}" for i in mine if i.status == "violated"), None)
            results.append(
                LemmaResult(
                    suite, len(mine), counts["verified"], counts["hypothesis-failed"], counts["violated"], first
                )
            )
        return results

    @property
    def violations(self) -> int:
        return sum(case.status == "violated" for case in self.cases) + sum(
            instance.status == "violated" for instance in self.instances
        )

    @property
    def exit_code(self) -> int:
        return 1 if self.violations else 0


def _summary(report: CampaignReport) -> dict[str, object]:
    statuses = Counter(case.status for case in report.cases)
    return {
        "kind": "summary",
        "groups": len(report.groups),
        "skipped": [{"group": s.group, "reason": s.reason} for s in report.skipped],
        "theorem_a": {status: statuses[status] for status in CASE_STATUSES},
        "converse": sum(case.converse for case in report.cases),
        "lemmas": {result.suite: result.record() for result in report.results()},
        "violations": report.violations,
        "result": "FAILED" if report.violations else "PASSED",
    }


def render_jsonl(report: CampaignReport) -> str:
    records = [case.record() for case in report.cases]
    records.extend(instance.record() for instance in report.instances)
    records.append(_summary(report))
    return "".join(json.dumps(record, ensure_ascii=False) + "\n" for record in records)


def _case_line(case: TheoremACase) -> str:
    conditions = ",".join(case.size_conditions) or "none"
    hyp2 = "n/a" if case.hyp2 is None else str(case.hyp2).lower()
    return (
        f"  {case.group} (order {case.order}) p={case.p} d={case.d}: size conditions {conditions}; "
        f"hyp1={str(case.hyp1).lower()} hyp2={hyp2} p-supersoluble={str(case.conclusion).lower()}"
    )


def render_text(report: CampaignReport) -> str:
    summary = _summary(report)
    lines = [f"embedcheck campaign: {len(report.groups)} groups, {len(report.skipped)} skipped"]
    for skipped in report.skipped:
        lines.append(f"  skipped {skipped.group}: {skipped.reason}")
    if "theorem-a" in report.suites:
        lines.append(f"theorem-a: {len(report.cases)} cases {summary['theorem_a']}")
        for status in ("violated", "sharpness"):
            lines.extend(f"{status}:{_case_line(case)}" for case in report.cases if case.status == status)
        converse = [case for case in report.cases if case.converse]
        if converse:
            lines.append(f"converse (informational, not asserted by the theorem): {len(converse)} cases")
    for result in report.results():
        line = (
            f"{result.suite}: {result.trials} trials, {result.verified} verified, "
            f"{result.hypothesis_failed} hypothesis-failed, {result.violated} violated"
        )
        if result.first_counterexample is not None:
            line += f"; first counterexample {result.first_counterexample}"
        lines.append(line)
    lines.append(f"result: {summary['result']} ({report.violations} violations) in {report.elapsed:.1f}s")
    return "\n".join(lines) + "\n"


def render_report(report: CampaignReport, fmt: ReportFormat) -> str:
    return render_jsonl(report) if fmt == "jsonl" else render_text(report)


def emit_report(report: CampaignReport, path: Path, fmt: ReportFormat) -> None:
    """Write ``report`` to ``path``.

    Raises:
        OSError: ``path`` cannot be written.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_report(report, fmt), encoding="utf-8")

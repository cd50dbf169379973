"""Verification campaigns: Theorem A, the statement suites and their reports."""

from .campaign import SELECTIONS, resolve_suites, run_campaign, verify_lemma_suite, verify_theorem_a
from .context import CampaignOptions, GroupContext
from .lemmas import SUITES
from .report import (
    CampaignReport,
    LemmaInstance,
    LemmaResult,
    SkippedGroup,
    TheoremACase,
    classify_case,
    emit_report,
    render_jsonl,
    render_report,
    render_text,
)
from .theorem_a import size_conditions, theorem_a_cases


__all__ = [
    "SELECTIONS",
    "SUITES",
    "CampaignOptions",
    "CampaignReport",
    "GroupContext",
    "LemmaInstance",
    "LemmaResult",
    "SkippedGroup",
    "TheoremACase",
    "classify_case",
    "emit_report",
    "render_jsonl",
    "render_report",
    "render_text",
    "resolve_suites",
    "run_campaign",
    "size_conditions",
    "theorem_a_cases",
    "verify_lemma_suite",
    "verify_theorem_a",
]

"""Campaign runner: evaluates Theorem A and the statement suites over a corpus.

Groups are independent, so with ``jobs > 1`` they are evaluated in worker processes; the
results are merged back in manifest order, which keeps reports identical for any job count.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..config import use_caps
from ..corpus import CorpusEntry, CorpusManifest
from ..errors import CapExceededError
from ..perm import Perm, build_group
from .context import CampaignOptions, GroupContext
from .lemmas import FIXTURE_SUITES, SUITES, run_suites, suite_fixtures
from .report import CampaignReport, LemmaInstance, SkippedGroup, TheoremACase
from .theorem_a import theorem_a_cases


logger = logging.getLogger(__name__)

THEOREM_A = "theorem-a"
SELECTIONS: dict[str, tuple[str, ...]] = {
    THEOREM_A: (THEOREM_A,),
    "lemmas": tuple(SUITES),
    "all": (THEOREM_A, *SUITES),
}


def resolve_suites(selection: str) -> tuple[str, ...]:
    """Suites named by ``selection``: ``theorem-a``, ``lemmas``, ``all`` or a single suite name.

    Raises:
        ValueError: Unknown selection.
    """
    if selection in SELECTIONS:
        return SELECTIONS[selection]
    if selection in SUITES:
        return (selection,)
    raise ValueError(f"unknown suite {selection!r}")


@dataclass(frozen=True, slots=True)
class _Job:
    # groups travel as generator images; workers rebuild them under the campaign caps
    name: str
    degree: int
    gens: tuple[tuple[int, ...], ...]
    suites: tuple[str, ...]
    options: CampaignOptions

    @staticmethod
    def of(entry: CorpusEntry, suites: tuple[str, ...], options: CampaignOptions) -> _Job:
        return _Job(entry.name, entry.group.degree, tuple(x.images for x in entry.group.gens), suites, options)


@dataclass(frozen=True, slots=True)
class _Outcome:
    cases: tuple[TheoremACase, ...]
    instances: tuple[LemmaInstance, ...]
    skipped: SkippedGroup | None


def _run_job(job: _Job) -> _Outcome:
    with use_caps(job.options.caps):
        try:
            group = build_group(job.degree, [Perm(images) for images in job.gens])
            ctx = GroupContext(job.name, group, job.options)
            cases = theorem_a_cases(ctx) if THEOREM_A in job.suites else []
            instances = run_suites(ctx, tuple(suite for suite in job.suites if suite != THEOREM_A))
        except CapExceededError as e:
            logger.warning("skipping %s: %s", job.name, e)
            return _Outcome((), (), SkippedGroup(job.name, str(e)))
    logger.info("%s: %d cases, %d instances", job.name, len(cases), len(instances))
    return _Outcome(tuple(cases), tuple(instances), None)


def _jobs(corpus: CorpusManifest, suites: tuple[str, ...], options: CampaignOptions) -> list[_Job]:
    jobs = [_Job.of(entry, suites, options) for entry in corpus]
    extra = tuple(suite for suite in suites if suite in FIXTURE_SUITES)
    if extra and jobs:
        taken = set(corpus.names())
        jobs.extend(_Job.of(entry, extra, options) for entry in suite_fixtures() if entry.name not in taken)
    return jobs


def _evaluate(jobs: list[_Job], workers: int) -> Iterable[_Outcome]:
    if workers == 1 or len(jobs) < 2:
        return [_run_job(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_job, jobs))


def run_campaign(corpus: CorpusManifest, suites: tuple[str, ...], options: CampaignOptions) -> CampaignReport:
    """Evaluate ``suites`` (``theorem-a`` and/or lemma suite names) on every corpus member.

    Members that hit a cap are reported in :attr:`CampaignReport.skipped`. A non-empty corpus
    also sends the :func:`~embedcheck.harness.lemmas.suite_fixtures` groups through the fixture suites.

    Raises:
        ValueError: An unknown suite name.
    """
    for suite in suites:
        if suite != THEOREM_A and suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}")
    start = time.perf_counter()
    jobs = _jobs(corpus, suites, options)
    cases: list[TheoremACase] = []
    instances: list[LemmaInstance] = []
    skipped: list[SkippedGroup] = []
    for outcome in _evaluate(jobs, options.jobs):
        cases.extend(outcome.cases)
        instances.extend(outcome.instances)
        if outcome.skipped is not None:
            skipped.append(outcome.skipped)
    elapsed = time.perf_counter() - start
    report = CampaignReport(
        groups=tuple(job.name for job in jobs),
        cases=tuple(cases),
        instances=tuple(instances),
        skipped=tuple(skipped),
        suites=suites,
        elapsed=elapsed,
    )
    logger.info("campaign over %d groups finished in %.1fs, %d violations", len(jobs), elapsed, report.violations)
    return report


def verify_theorem_a(corpus: CorpusManifest, options: CampaignOptions) -> CampaignReport:
    """Theorem A over ``corpus``: one case per group, prime ``p`` and ``1 < d < |P|``."""
    return run_campaign(corpus, SELECTIONS[THEOREM_A], options)


def verify_lemma_suite(corpus: CorpusManifest, options: CampaignOptions) -> CampaignReport:
    """Every statement suite over ``corpus``."""
    return run_campaign(corpus, SELECTIONS["lemmas"], options)

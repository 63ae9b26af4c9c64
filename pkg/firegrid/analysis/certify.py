"""
Trace certification

Replays a trace and decides, with a certificate, whether the fire it records
is contained. Exit codes follow the verdict: 0 verified, 1 refuted,
2 inconclusive.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from firegrid.adversaries import parse_adversary
from firegrid.analysis.barrier import verified_min_barrier
from firegrid.analysis.escape import NotEscaped, flood_escape_check
from firegrid.engine import EscapeCertificate, GameHistory
from firegrid.errors import ClipTooSmall, FiregridError, PreconditionViolated
from firegrid.trace import Trace, replay_trace

logger = logging.getLogger(__name__)

DEFAULT_CERTIFY_CLIP = 12

EXIT_CODES = {"verified": 0, "refuted": 1, "inconclusive": 2}
QUERIES = ("containment", "escape")


@dataclass(frozen=True)
class CertifyResult:
    query: str
    status: str
    details: str
    certificate: Optional[EscapeCertificate] = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def line(self) -> str:
        return f"verdict={self.status} query={self.query} {self.details}".rstrip()


def _containment_fact(trace: Trace, clip_radius: int):
    """(True | False | None, details, certificate) for 'the fire is contained'"""
    state, records = replay_trace(trace)
    if records and not records[-1].newly_burned:
        return True, f"contained turn={state.turn} burned={len(state.burning)}", None

    try:
        adversary = parse_adversary(trace.adversary_id)
    except FiregridError as e:
        return None, f"adversary unavailable: {e}", None

    ix, iy = trace.ignition
    normalized = [r.translated(-ix, -iy) for r in records]
    history = GameHistory(state=state.translated(-ix, -iy), records=normalized)
    try:
        tail = adversary.declared_tail(history)
    except PreconditionViolated:
        tail = None

    if tail is not None and state.turn >= tail:
        verdict = flood_escape_check(state, future_budgets_zero=True)
        if isinstance(verdict, NotEscaped):
            return True, f"enclosed projected_turn={verdict.contained_turn} burned={verdict.burned_count}", None
        return False, f"certificate={verdict.describe()}", verdict

    remaining = adversary.remaining_budgets(history)
    if remaining is None:
        return None, "future budgets unknown", None
    try:
        barrier = verified_min_barrier(state, clip_radius)
    except ClipTooSmall as e:
        return None, str(e), None
    budget = sum(remaining)
    if barrier > budget:
        certificate = EscapeCertificate(
            kind="BarrierDeficit",
            turn=state.turn,
            min_barrier=barrier,
            remaining_budget=budget,
            clip_radius=clip_radius,
        )
        return False, f"certificate={certificate.describe()}", certificate
    return None, f"barrier {barrier} affordable with {budget} remaining", None


def certify_trace(trace: Trace, query: str = "containment", clip_radius: int = DEFAULT_CERTIFY_CLIP) -> CertifyResult:
    """
    Answer a containment or escape query about a trace.

    Args:
        trace: parsed trace (replayed and checked first)
        query: "containment" or "escape"
        clip_radius: clip for barrier-deficit certificates

    Raises:
        TraceMismatch: the trace does not replay
    """
    if query not in QUERIES:
        raise PreconditionViolated(f"unknown query '{query}' (known: {', '.join(QUERIES)})")
    contained, details, certificate = _containment_fact(trace, clip_radius)
    if contained is None:
        status = "inconclusive"
    elif contained == (query == "containment"):
        status = "verified"
    else:
        status = "refuted"
    logger.info(f"🔍 certify {query}: {status} ({details})")
    return CertifyResult(query=query, status=status, details=details, certificate=certificate)

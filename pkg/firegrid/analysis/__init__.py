"""
Outcome certification and claim verification
"""

from firegrid.analysis.barrier import fire_enclosed, min_barrier, verified_min_barrier
from firegrid.analysis.certify import CertifyResult, certify_trace
from firegrid.analysis.escape import NotEscaped, flood_escape_check
from firegrid.analysis.ledger import LossLedger, RingRecord, loss_accounting
from firegrid.analysis.minimax import SearchResult, Verdict, bounded_minimax

__all__ = [
    "CertifyResult",
    "LossLedger",
    "NotEscaped",
    "RingRecord",
    "SearchResult",
    "Verdict",
    "bounded_minimax",
    "certify_trace",
    "fire_enclosed",
    "flood_escape_check",
    "loss_accounting",
    "min_barrier",
    "verified_min_barrier",
]

"""Claim registry, samplers, limit ladder, reporting and the CLI."""

from .claims import REGISTRY, ClaimRecord
from .report import ReportRow, TrialConfig, coverage_audit, run_claims
from .sampling import REGIMES, child_seed, sample_frame

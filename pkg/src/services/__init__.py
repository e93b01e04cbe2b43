"""Services package."""
from .delta_service import DeltaService
from .verification import GROUPS, Outcome, VerificationSuite, quarter_disk

__all__ = ["DeltaService", "GROUPS", "Outcome", "VerificationSuite", "quarter_disk"]

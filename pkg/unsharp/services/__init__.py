"""Services package."""
from unsharp.services.protocols import ITenseOperators
from unsharp.services.axioms import verify_axioms
from unsharp.services.connectives import Connectives
from unsharp.services.tense import TenseService
from unsharp.services.frame_induction import FrameInductionService

__all__ = ["Connectives", "FrameInductionService", "ITenseOperators", "TenseService", "verify_axioms"]

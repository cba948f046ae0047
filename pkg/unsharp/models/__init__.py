"""Data models package."""
from unsharp.models.algebra import EffectAlgebra, RawAlgebra
from unsharp.models.frame import ExtendedFrame, TimeFrame
from unsharp.models.poset import Poset
from unsharp.models.report import CheckResult, Report

__all__ = ["CheckResult", "EffectAlgebra", "ExtendedFrame", "Poset", "RawAlgebra", "Report", "TimeFrame"]

"""Shared fixtures: the shipped data files and small settings."""
from pathlib import Path

import pytest

from unsharp.config import Settings
from unsharp.formats.parsers import load_algebra, load_frame, parse_props, read_text
from unsharp.models.algebra import EffectAlgebra
from unsharp.models.frame import Proposition, TimeFrame
from unsharp.services.connectives import Connectives
from unsharp.services.tense import TenseService

DATA_DIR = Path(__file__).parent.parent / "data"
FIXTURES_DIR = Path(__file__).parent / "fixtures"


def golden(name: str) -> str:
    """Golden file text without its '#' provenance lines."""
    lines = (FIXTURES_DIR / name).read_text(encoding="utf-8").splitlines(keepends=True)
    return "".join(line for line in lines if not line.startswith("#"))


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def settings() -> Settings:
    """Default limits with a small random-algebra suite."""
    return Settings(random_algebras=3)


@pytest.fixture
def nonlattice() -> EffectAlgebra:
    return load_algebra(DATA_DIR / "nonlattice.ea")


@pytest.fixture
def nonlattice_connectives(nonlattice) -> Connectives:
    return Connectives(nonlattice)


@pytest.fixture
def leq3_frame() -> TimeFrame:
    return load_frame(DATA_DIR / "leq3.tf")


@pytest.fixture
def leq3_props(nonlattice, leq3_frame) -> dict[str, Proposition]:
    return parse_props(read_text(DATA_DIR / "leq3.pf"), nonlattice, leq3_frame.times)


@pytest.fixture
def leq3_tense(nonlattice, leq3_frame) -> TenseService:
    return TenseService(nonlattice, leq3_frame)

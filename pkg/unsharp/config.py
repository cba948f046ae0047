"""Runtime settings read from the environment (and an optional .env file)."""
import os

import dotenv
from pydantic import BaseModel, Field

dotenv.load_dotenv()


class Settings(BaseModel):
    """
    Settings shared by the law suites and the CLI.

    Attributes:
        log_level: Logging level name (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        seed: Seed of every sampled tier
        jobs: Number of worker threads for the law suites
        exhaustive_limit: Largest search space that is enumerated instead of sampled
        sample_size: Number of samples drawn in sampled tiers
        pair_sample_size: Number of proposition pairs drawn for pairwise tense checks
        family_cap: Largest family the transformation function may produce
        selection_cap: Largest number of extension selections enumerated per proposition
        random_algebras: Number of random effect algebras in the generated law suite
    """
    log_level: str = Field("INFO", description="Logging level name")
    seed: int = Field(20240229, description="Seed of every sampled tier")
    jobs: int = Field(1, ge=1, description="Worker threads for the law suites")
    exhaustive_limit: int = Field(10_000, ge=1, description="Largest enumerated search space")
    sample_size: int = Field(1000, ge=1, description="Samples drawn in sampled tiers")
    pair_sample_size: int = Field(48, ge=1, description="Proposition pairs drawn for pairwise tense checks")
    family_cap: int = Field(1_000_000, ge=1, description="Largest transformation-function family")
    selection_cap: int = Field(256, ge=1, description="Largest number of extension selections per proposition")
    random_algebras: int = Field(100, ge=0, description="Random algebras in the generated law suite")


def load_settings() -> Settings:
    """
    Build settings from environment variables.

    Reads LOG_LEVEL and the UNSHARP_* variables; unset variables keep their defaults.

    Returns:
        Validated Settings instance

    Raises:
        pydantic.ValidationError: If a variable holds an invalid value
    """
    env = {
        "log_level": os.getenv("LOG_LEVEL"),
        "seed": os.getenv("UNSHARP_SEED"),
        "jobs": os.getenv("UNSHARP_JOBS"),
        "exhaustive_limit": os.getenv("UNSHARP_EXHAUSTIVE_LIMIT"),
        "sample_size": os.getenv("UNSHARP_SAMPLE_SIZE"),
        "pair_sample_size": os.getenv("UNSHARP_PAIR_SAMPLE_SIZE"),
        "family_cap": os.getenv("UNSHARP_FAMILY_CAP"),
        "selection_cap": os.getenv("UNSHARP_SELECTION_CAP"),
        "random_algebras": os.getenv("UNSHARP_RANDOM_ALGEBRAS"),
    }
    settings = Settings.model_validate({k: v for k, v in env.items() if v is not None})
    return settings.model_copy(update={"log_level": settings.log_level.upper()})

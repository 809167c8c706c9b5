"""Service configuration: a single TOML file validated against a strict
schema at startup.  Unknown keys are rejected so typos fail loudly."""

from __future__ import annotations

import json
import sys
from pathlib import Path

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from vietext.errors import ConfigError

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ServerConfig(_Strict):
    host: str = "127.0.0.1"
    port: int = 8077


class ResourcePaths(_Strict):
    """Optional overrides; None means the bundled fixture file."""
    dictionary: str | None = None
    stopwords_vi: str | None = None
    stopwords_en: str | None = None
    lexicon_vi: str | None = None
    lexicon_en: str | None = None
    aspects: str | None = None
    thesaurus_vi: str | None = None
    thesaurus_en: str | None = None
    refcorpus_vi: str | None = None
    refcorpus_en: str | None = None


class EndpointsConfig(_Strict):
    classifier_url: str | None = None
    generator_url: str | None = None
    classifier_timeout: float = 30.0
    generator_timeout: float = 120.0


class LimitsConfig(_Strict):
    session_ttl_minutes: float = 60.0
    max_document_bytes: int = 10 * 1024 * 1024
    max_session_bytes: int = 50 * 1024 * 1024


class AnalysisConfig(_Strict):
    sentiment_thresholds: tuple[float, float, float, float] = (-1.0, -0.25, 0.25, 1.0)
    sentiment_saturation: float = 2.0
    kwic_window: int = 5
    tree_max_depth: int = 4
    tree_min_branch_count: int = 1
    wordcloud_top_k: int = 50
    keyness_min_count: int = 2
    bpe_num_merges: int = 2000

    @field_validator("sentiment_thresholds")
    @classmethod
    def _ascending(cls, v):
        if not (v[0] < v[1] < v[2] < v[3]):
            raise ValueError("sentiment_thresholds must be strictly ascending")
        return v


class ServiceConfig(_Strict):
    server: ServerConfig = ServerConfig()
    resources: ResourcePaths = ResourcePaths()
    endpoints: EndpointsConfig = EndpointsConfig()
    limits: LimitsConfig = LimitsConfig()
    analysis: AnalysisConfig = AnalysisConfig()


def load_config(path: str | Path | None) -> ServiceConfig:
    """Parse and validate a TOML config file; None gives all defaults."""
    if path is None:
        return ServiceConfig()
    try:
        raw = tomllib.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        return ServiceConfig.model_validate(raw)
    except ValidationError as exc:
        issues = "; ".join(
            f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}"
            for err in exc.errors())
        raise ConfigError(f"invalid config {path}: {issues}") from exc


def config_schema_json() -> str:
    """The published JSON schema the config file validates against."""
    return json.dumps(ServiceConfig.model_json_schema(), indent=2, sort_keys=True)

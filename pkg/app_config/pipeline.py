"""Declarative pipeline configuration.

``PipelineConfig`` validates a merged mapping of defaults, the optional config
file and command-line flags. Unknown keys anywhere are rejected.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Literal, Mapping

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from network.types import EdgeKind
from ingest.resolve import DanglingPolicy
from analysis.centrality import Metric

from .load_configs import ConfigError, load, merge_overrides

DEFAULT_LAYERS = (EdgeKind.ALLIANCE, EdgeKind.WORK)


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")

    enabled: bool = True


class CentralityOptions(_Section):
    top: int = Field(2, ge=1)
    metrics: list[Metric] = Field(default_factory=lambda: list(Metric))


class CommunityOptions(_Section):
    method: Literal["girvan-newman", "fiedler", "both"] = "both"
    cuts: int = 1
    strict: bool = False

    @model_validator(mode="after")
    def _cuts_positive(self) -> "CommunityOptions":
        if self.enabled and self.cuts < 1:
            raise ValueError("communities.cuts must be at least 1 when communities are enabled")
        return self


class CliqueOptions(_Section):
    min_size: int = Field(2, ge=1)
    maximum_only: bool = False
    include_trivial: bool = False


class FitOptions(_Section):
    method: Literal["ls", "mle", "both"] = "ls"
    k_min: int = Field(1, ge=1)
    estimator: Literal["exact", "approximate"] = "exact"
    log_bins: bool = False
    log: bool = False


class LayoutOptions(_Section):
    seed: int | None = None
    iterations: int = Field(500, ge=1)


class PipelineConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    input: Path
    layers: list[EdgeKind] = Field(default_factory=lambda: list(DEFAULT_LAYERS))
    out_dir: Path | None = None
    dangling: DanglingPolicy = DanglingPolicy.MATERIALIZE_STUB
    giant_component: bool = True
    workers: int = Field(2, ge=1)
    centrality: CentralityOptions = Field(default_factory=CentralityOptions)
    communities: CommunityOptions = Field(default_factory=CommunityOptions)
    cliques: CliqueOptions = Field(default_factory=CliqueOptions)
    fit: FitOptions = Field(default_factory=FitOptions)
    layout: LayoutOptions = Field(default_factory=LayoutOptions)

    @model_validator(mode="after")
    def _layout_needs_seed(self) -> "PipelineConfig":
        if self.layout.enabled and self.layout.seed is None:
            raise ValueError("layout.seed is required when layout is enabled")
        if not self.layers:
            raise ValueError("at least one layer must be selected")
        return self


def _describe(exc: ValidationError) -> str:
    parts = []
    for err in exc.errors():
        loc = ".".join(str(p) for p in err.get("loc", ())) or "config"
        parts.append(f"{loc}: {err.get('msg', 'invalid value')}")
    return "; ".join(parts)


def build_config(
    overrides: Mapping[str, Any], config_path: str | Path | None = None
) -> PipelineConfig:
    """Merge model defaults, the config file and flags (flags win)."""
    data: Mapping[str, Any] = load(config_path) if config_path else {}
    merged = merge_overrides(data, overrides)
    try:
        return PipelineConfig.model_validate(merged)
    except ValidationError as exc:
        raise ConfigError(f"Invalid pipeline configuration: {_describe(exc)}") from exc

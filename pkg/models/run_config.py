"""
Validated description of one CLI invocation.
"""

from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

Command = Literal[
    "secondary",
    "triangulations",
    "lafforgue",
    "mpp",
    "paths",
    "an-tree",
    "an-quiver",
    "an-perversity",
    "monodromy",
    "golden-list",
]

_CONFIG_COMMANDS = {"secondary", "triangulations", "lafforgue", "mpp", "paths"}
_AN_COMMANDS = {"an-tree", "an-quiver", "an-perversity", "monodromy"}


class RunConfig(BaseModel):
    command: Command
    config_path: Optional[Path] = None
    n: Optional[int] = Field(default=None, ge=1)
    J: List[int] = Field(default_factory=list)
    sharpen: List[int] = Field(default_factory=list)
    output_format: Literal["json", "dot", "off"] = "json"
    output_path: Optional[Path] = None
    s: Optional[float] = Field(default=None, gt=0)
    seed: Optional[int] = None
    trials: int = Field(default=1, ge=1)
    epsilon: Optional[float] = Field(default=None, gt=0)
    gap_ratio: Optional[float] = Field(default=None, gt=1)
    residual: Optional[float] = Field(default=None, gt=0)
    golden: Optional[str] = None
    layout: Literal["shuffle", "blocks"] = "shuffle"
    sweep: bool = False

    @field_validator("J")
    @classmethod
    def _sorted_unique(cls, value: List[int]) -> List[int]:
        if len(set(value)) != len(value):
            raise ValueError("J contains repeated breakpoints")
        return sorted(value)

    @model_validator(mode="after")
    def _consistent(self) -> "RunConfig":
        if self.command in _CONFIG_COMMANDS and self.config_path is None:
            raise ValueError(f"{self.command} needs a configuration file")
        if self.command in {"mpp", "paths"} and not self.sharpen:
            raise ValueError(f"{self.command} needs --sharpen")
        if self.command in _AN_COMMANDS:
            if self.n is None:
                raise ValueError(f"{self.command} needs --n")
            bad = [j for j in self.J if not 1 <= j <= self.n + 1]
            if bad:
                raise ValueError(f"J entries {bad} outside [1, {self.n + 1}]")
        if self.output_format == "dot" and self.command not in {"an-tree", "an-quiver", "triangulations"}:
            raise ValueError(f"--format dot is not available for {self.command}")
        if self.output_format == "off" and self.command not in {"secondary", "lafforgue", "mpp"}:
            raise ValueError(f"--format off is not available for {self.command}")
        if self.sweep and (self.command != "monodromy" or self.J):
            raise ValueError("--sweep runs on the single circuit: monodromy with empty --J")
        return self

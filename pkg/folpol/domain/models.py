# folpol/domain/models.py
"""
Domain Models - Request and option models shared by the CLI and the HTTP surface
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from folpol.core.config import settings

COMMANDS = (
    "reduce",
    "invariants",
    "separatrices",
    "balanced",
    "var",
    "gsv",
    "generalized-curve",
    "second-type",
    "poincare",
    "bezout",
    "brunella",
    "linsneto",
)


class EngineOptions(BaseModel):
    """Per-invocation overrides of the engine settings"""

    model_config = ConfigDict(extra="forbid")

    trunc: Optional[int] = Field(default=None, ge=4, description="Fixed truncation order (adaptive when unset)")
    max_blowups: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = None
    chart: Literal["z", "x", "y"] = "z"
    workers: Optional[int] = Field(default=None, ge=1)

    def resolved_seed(self) -> int:
        return settings.SEED if self.seed is None else self.seed

    def resolved_max_blowups(self) -> int:
        return settings.MAX_BLOWUPS if self.max_blowups is None else self.max_blowups


class RunRequest(BaseModel):
    """Body of a command: a form or a catalogue example, plus curves and options"""

    model_config = ConfigDict(extra="forbid")

    form: Optional[str] = Field(default=None, description="1-form such as 'x dy - y dx'")
    curves: List[str] = Field(default_factory=list, description="Curves of separatrices or the invariant curve")
    example: Optional[str] = Field(default=None, description="Name of a catalogue entry")
    alpha: Optional[str] = Field(default=None, description="Pencil parameter alpha_1/beta_1 in Q(j)")
    lines: List[int] = Field(default_factory=lambda: [1, 2, 3, 4, 5], description="Branch counts for the radial local terms")
    options: EngineOptions = Field(default_factory=EngineOptions)


class CatalogEntryModel(BaseModel):
    name: str
    kind: Literal["germ", "foliation"]
    form: str
    curves: List[str] = Field(default_factory=list)
    description: str = ""
    generalized_curve: Optional[bool] = None
    second_type: Optional[bool] = None

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.conf.config import config

OutputFormat = Literal["json", "csv", "dot", "newick", "text"]


class RunConfig(BaseModel):
    """
    Options of one command-line invocation that reach the clustering pipeline.

    Attributes:
        command (str): The subcommand.
        table (Path | None): Property table CSV; the bundled table when absent.
        properties (tuple[str, ...]): Selected properties; the default selection when empty.
        metric (str): Distance metric.
        linkage (str): Linkage criterion.
        standardize (bool): Standardize columns before computing distances.
        basis_singletons (bool): Add singletons to the branch basis.
        cut (str): ``auto`` (population-product rule), ``k`` or ``height``.
        k (int | None): Cluster count for ``cut == "k"``.
        height (float | None): Cut height for ``cut == "height"``.
        output_format (OutputFormat): Output format.
        sets (tuple[Path, ...]): Named element-set files.
    """
    command: str
    table: Path | None = None
    properties: tuple[str, ...] = ()
    metric: Literal["euclidean", "manhattan"] = Field(default_factory=lambda: config.DEFAULT_METRIC)
    linkage: Literal["single", "complete", "average"] = Field(default_factory=lambda: config.DEFAULT_LINKAGE)
    standardize: bool = True
    basis_singletons: bool = False
    cut: Literal["auto", "k", "height"] = "auto"
    k: int | None = Field(default=None, gt=0)
    height: float | None = Field(default=None, ge=0)
    output_format: OutputFormat = "text"
    sets: tuple[Path, ...] = ()
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_cut(self):
        if self.k is not None and self.height is not None:
            raise ValueError("give at most one of --k and --height")
        if self.cut == "k" and self.k is None:
            raise ValueError("cut by k needs --k")
        if self.cut == "height" and self.height is None:
            raise ValueError("cut by height needs --height")
        return self

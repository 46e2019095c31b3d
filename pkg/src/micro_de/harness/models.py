"""Pydantic models for experiment matrices and archive manifests."""

from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..benchmarks import FUNCTION_NAMES
from ..constants import (
    CELL_ID_SEPARATOR,
    DEFAULT_CMF_VALUE,
    DEFAULT_CROSSOVER_RATE,
    DEFAULT_EVTR,
    DEFAULT_FACTOR_RANGE,
    DEFAULT_MASTER_SEED,
    DEFAULT_N_RUN,
    DEFAULT_NFC_MAX_MULTIPLIER,
    MIN_POPULATION_SIZE,
    STATUS_COMPLETED,
    STATUS_PENDING,
)
from ..exceptions import InvalidConfigurationError
from ..operators.mutation import FactorMode, parse_factor_mode, parse_scheme


class FactorModeSpec(BaseModel):
    """A factor mode entry of a matrix; unset parameters fall back to the matrix defaults."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["cmf", "srmf", "vrmf"] = Field(..., description="Factor mode identifier")
    value: float | None = Field(None, ge=0, description="Constant factor (CMF only)")
    low: float | None = Field(None, ge=0, description="Lower end of the sampling range")
    high: float | None = Field(None, description="Upper end of the sampling range")
    label: str | None = Field(
        None,
        description="Name used in cell ids; lets one mode appear with two ranges",
    )

    @field_validator("label")
    @classmethod
    def _label_is_path_safe(cls, label):
        if label is not None and (not label or CELL_ID_SEPARATOR in label or "/" in label):
            raise ValueError(f"Invalid mode label '{label}'")
        return label

    @property
    def display_label(self) -> str:
        return self.label or self.kind

    def resolve(self, cmf_value: float, factor_range: tuple[float, float]) -> FactorMode:
        low = factor_range[0] if self.low is None else self.low
        high = factor_range[1] if self.high is None else self.high
        value = cmf_value if self.value is None else self.value
        return parse_factor_mode(self.kind, value=value, factor_range=(low, high))


@dataclass(frozen=True)
class CellSpec:
    """One (function, D, N_P, scheme, mode) cell of a matrix."""

    function: str
    d: int
    n_p: int
    scheme: str
    mode: FactorMode
    mode_label: str

    @property
    def family(self) -> str:
        return CELL_ID_SEPARATOR.join(
            [f"d{self.d}", f"np{self.n_p}", self.scheme, self.mode_label]
        )

    @property
    def cell_id(self) -> str:
        return CELL_ID_SEPARATOR.join([self.function, self.family])


class ExperimentConfig(BaseModel):
    """A run matrix: every combination of the listed values is one cell."""

    model_config = ConfigDict(extra="forbid")

    name: str = Field("experiment", description="Free-form experiment name")
    functions: list[str] = Field(..., min_length=1, description="Benchmark function names")
    schemes: list[str] = Field(..., min_length=1, description="Mutation scheme identifiers")
    modes: list[FactorModeSpec] = Field(..., min_length=1, description="Factor modes")
    n_p: list[int] = Field(..., min_length=1, description="Population sizes")
    d: list[int] = Field(..., min_length=1, description="Problem dimensions")
    cr: float = Field(DEFAULT_CROSSOVER_RATE, ge=0, le=1, description="Crossover rate")
    evtr: float = Field(DEFAULT_EVTR, ge=0, description="Error to value-to-reach")
    nfc_max_multiplier: int = Field(
        DEFAULT_NFC_MAX_MULTIPLIER, gt=0, description="NFC_Max = multiplier * D"
    )
    n_run: int = Field(DEFAULT_N_RUN, ge=1, description="Independent runs per cell")
    master_seed: int = Field(DEFAULT_MASTER_SEED, ge=0, description="Root of all seeds")
    workers: int = Field(1, description="Worker processes (-1 for all cores)")
    cmf_value: float = Field(DEFAULT_CMF_VALUE, ge=0, description="Default CMF factor")
    factor_range: tuple[float, float] = Field(
        DEFAULT_FACTOR_RANGE, description="Default SRMF/VRMF sampling range"
    )
    shared_factor: bool = Field(
        False, description="Use one factor draw for both difference terms"
    )
    record_diversity: bool = Field(True, description="Record C_D and P_D per generation")

    @field_validator("modes", mode="before")
    @classmethod
    def _modes_from_names(cls, modes):
        if not isinstance(modes, list):
            return modes
        return [{"kind": m.lower()} if isinstance(m, str) else m for m in modes]

    @field_validator("functions")
    @classmethod
    def _functions_known(cls, functions):
        unknown = [f for f in functions if f not in FUNCTION_NAMES]
        if unknown:
            raise ValueError(
                f"Unknown functions {unknown}, expected any of: {', '.join(FUNCTION_NAMES)}"
            )
        return functions

    @field_validator("schemes")
    @classmethod
    def _schemes_known(cls, schemes):
        return [parse_scheme(s).value for s in schemes]

    @field_validator("n_p")
    @classmethod
    def _population_sizes(cls, n_p):
        if any(n < MIN_POPULATION_SIZE for n in n_p):
            raise ValueError(f"Population sizes must be at least {MIN_POPULATION_SIZE}")
        return n_p

    @field_validator("d")
    @classmethod
    def _dimensions(cls, d):
        if any(x < 1 for x in d):
            raise ValueError("Dimensions must be at least 1")
        return d

    @field_validator("workers")
    @classmethod
    def _workers(cls, workers):
        if workers == 0 or workers < -1:
            raise ValueError("workers must be a positive count or -1")
        return workers

    @model_validator(mode="after")
    def _matrix_is_legal(self):
        for scheme in self.schemes:
            minimum = parse_scheme(scheme).min_population
            illegal = [n for n in self.n_p if n < minimum]
            if illegal:
                raise ValueError(
                    f"Scheme '{scheme}' needs N_P >= {minimum}, got {illegal}"
                )
        labels = [m.display_label for m in self.modes]
        if len(set(labels)) != len(labels):
            raise ValueError(f"Mode labels must be unique, got {labels}; set 'label'")
        try:
            for mode in self.modes:
                mode.resolve(self.cmf_value, self.factor_range)
        except InvalidConfigurationError as e:
            raise ValueError(str(e)) from None
        return self

    @classmethod
    def load(cls, path: Path) -> "ExperimentConfig":
        """Read and validate a JSON matrix file."""
        return cls.model_validate_json(Path(path).read_text())

    def nfc_max(self, dimension: int) -> int:
        return self.nfc_max_multiplier * dimension

    def cells(self) -> list[CellSpec]:
        """Every cell of the matrix in a stable order."""
        return [
            CellSpec(
                function=function,
                d=d,
                n_p=n_p,
                scheme=scheme,
                mode=mode.resolve(self.cmf_value, self.factor_range),
                mode_label=mode.display_label,
            )
            for function in self.functions
            for d in self.d
            for n_p in self.n_p
            for scheme in self.schemes
            for mode in self.modes
        ]


class FactorSnapshot(BaseModel):
    kind: str
    value: float
    low: float
    high: float

    @classmethod
    def of(cls, mode: FactorMode) -> "FactorSnapshot":
        return cls(kind=mode.kind.value, value=mode.value, low=mode.low, high=mode.high)


class RunEntry(BaseModel):
    """Outcome of one run as listed in the manifest."""

    run: int = Field(..., description="Run index inside the cell")
    seed: int = Field(..., description="Seed the run's generator was built from")
    file: str = Field(..., description="History CSV, relative to the archive root")
    status: str = Field(..., description="completed or failed")
    final_error: float | None = Field(None, description="|BFV - VTR| at termination")
    final_best_value: float | None = Field(None, description="Best objective value")
    nfc: int | None = Field(None, description="Evaluations spent")
    generations: int | None = Field(None, description="Generations completed")
    terminated_by: str | None = Field(None, description="ErrorReached or BudgetExhausted")
    error: str | None = Field(None, description="Failure message")


class CellEntry(BaseModel):
    """A cell of the archive with all of its runs."""

    cell_id: str
    family: str
    function: str
    d: int
    n_p: int
    scheme: str
    mode: str
    factor: FactorSnapshot
    nfc_max: int
    status: str = STATUS_PENDING
    runs: list[RunEntry] = Field(default_factory=list)
    benchmark_data: str | None = Field(None, description="Shift/rotation .npz file")
    error: str | None = None

    def completed_runs(self) -> list[RunEntry]:
        return [r for r in self.runs if r.final_error is not None]


class ArchiveManifest(BaseModel):
    """Index of an experiment archive, written once after all runs finish."""

    version: str = Field(..., description="Package version that produced the archive")
    config: ExperimentConfig
    cells: list[CellEntry] = Field(default_factory=list)

    def cell(self, cell_id: str) -> CellEntry | None:
        return next((c for c in self.cells if c.cell_id == cell_id), None)

    def family(self, family: str) -> list[CellEntry]:
        return [c for c in self.cells if c.family == family]

    @property
    def failed_cells(self) -> list[CellEntry]:
        return [c for c in self.cells if c.status != STATUS_COMPLETED]

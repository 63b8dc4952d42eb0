"""Instance documents and the frozen run configuration."""

from enum import StrEnum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

from trickle.instances import (
    BaseGraph,
    ColoringInstance,
    InstanceError,
    instance_from_base,
    line_graph,
    make_instance,
    uniform_lists,
)
from trickle.logger import get_logger
from trickle.schemas import InstanceDocument, UniformLists
from trickle.serializer import deserialize

from .errors import InstanceFileError

logger = get_logger(__name__)


class Command(StrEnum):
    """Subcommands."""

    VERIFY = "verify"
    CONSTRAINTS = "constraints"
    SAMPLE = "sample"
    GARLAND = "garland"
    LEMMAS = "lemmas"


class OutputFormat(StrEnum):
    """Report encodings."""

    CSV = "csv"
    STRUCTURED = "structured"


class SampleMode(StrEnum):
    """How `sample` treats the chain."""

    AUTO = "auto"
    EXACT = "exact"
    SIMULATE = "simulate"


class RunConfig(BaseModel):
    """Everything one invocation depends on."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    instance_path: Path | None = None
    q: int | None = Field(default=None, ge=1)
    beta_override: int | None = Field(default=None, gt=1)
    iota_override: float | None = Field(default=None, gt=0)
    delta: int | None = Field(default=None, ge=2)
    max_delta: int = Field(default=64, ge=2)
    tol_exact: float = Field(default=1e-12, gt=0)
    tol_eig: float = Field(default=1e-9, gt=0)
    cap_enum: int = Field(default=10**7, gt=0)
    cap_facets: int = Field(default=10**4, gt=0)
    seed: int = 0
    eps: float = Field(default=0.25, gt=0, lt=1)
    mode: SampleMode = SampleMode.AUTO
    steps: int = Field(default=10**5, ge=0)
    chains: int = Field(default=1, ge=1)
    thin: int = Field(default=1, ge=1)
    trials: int = Field(default=100, ge=1)
    workers: int | None = Field(default=None, gt=0)
    output: Path | None = None
    output_format: OutputFormat = OutputFormat.STRUCTURED
    runtime: bool = False

    def require_instance(self) -> Path:
        """Path of the instance document; commands that need one call this."""
        if self.instance_path is None:
            msg = f"{self.command} needs an instance file"
            raise InstanceFileError(msg)
        return self.instance_path


def read_document(path: Path) -> InstanceDocument:
    """Parse an instance document."""
    try:
        raw = path.read_bytes()
    except OSError as exc:
        msg = f"cannot read {path}: {exc}"
        raise InstanceFileError(msg) from exc
    try:
        # JSON and validation errors are both ValueErrors
        return InstanceDocument.model_validate(deserialize(raw))
    except ValueError as exc:
        msg = f"malformed instance file {path}: {exc}"
        raise InstanceFileError(msg) from exc


def build_instance(
    document: InstanceDocument, *, q: int | None = None, require_slack: bool = True
) -> ColoringInstance:
    """Turn a document into an instance; `q` replaces its universe and any uniform list size."""
    universe = q if q is not None else document.q
    match document.lists:
        case UniformLists(uniform=size):
            width = q if q is not None else size
            explicit = None
        case lists:
            width = 0
            explicit = lists
    try:
        if document.base_graph is not None:
            base = BaseGraph.from_edges(document.base_graph)
            n = line_graph(base).graph.number_of_nodes()
            return instance_from_base(
                base,
                universe,
                explicit if explicit is not None else uniform_lists(n, width),
                require_slack=require_slack,
            )
        graph = document.graph or []
        return make_instance(
            graph,
            dict(enumerate(document.cliques or [])),
            explicit if explicit is not None else uniform_lists(len(graph), width),
            universe,
            require_slack=require_slack,
        )
    except InstanceError as exc:
        msg = f"invalid instance: {exc}"
        raise InstanceFileError(msg) from exc


def load_instance(
    path: Path, *, q: int | None = None, require_slack: bool = True
) -> ColoringInstance:
    """Read and build the instance stored at `path`."""
    instance = build_instance(read_document(path), q=q, require_slack=require_slack)
    logger.info("Loaded instance", extra={"path": str(path), "n": instance.n, "q": instance.q})
    return instance

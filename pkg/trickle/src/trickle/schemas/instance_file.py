"""Schema of the instance document read by the command line."""

from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class UniformLists(BaseModel):
    """Every vertex gets the list {1..uniform}."""

    model_config = ConfigDict(extra="forbid")

    uniform: int = Field(ge=1)


class InstanceDocument(BaseModel):
    """An instance document.

    Exactly one of `base_graph` (edge list of the base graph) or `graph`
    (adjacency lists of the line graph, with `cliques`) must be given.
    """

    model_config = ConfigDict(extra="forbid")

    base_graph: list[tuple[int, int]] | None = None
    graph: list[list[int]] | None = None
    cliques: list[list[int]] | None = None
    lists: UniformLists | list[list[int]]
    q: int = Field(ge=1)

    @model_validator(mode="after")
    def check_shape(self) -> Self:
        """Check that the graph is given in exactly one form."""
        if (self.base_graph is None) == (self.graph is None):
            msg = "give exactly one of base_graph or graph"
            raise ValueError(msg)
        if self.graph is not None and self.cliques is None:
            msg = "graph requires cliques"
            raise ValueError(msg)
        if self.base_graph is not None and self.cliques is not None:
            msg = "cliques are derived from base_graph and must not be given"
            raise ValueError(msg)
        return self

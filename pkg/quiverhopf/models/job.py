# quiverhopf/models/job.py
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

'''
Schemas for job and fixture configs. They only validate shape and ranges; the
domain objects (Group, RSC, ESC, FLData) are built from them by utils.loader,
which also runs the mathematical checks.
'''


class GroupSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["cyclic", "abelian", "free_abelian", "symmetric", "cayley"]
    n: Optional[int] = Field(default=None, ge=1)
    factors: List[int] = Field(default_factory=list)
    rank: Optional[int] = Field(default=None, ge=1)
    table: List[List[int]] = Field(default_factory=list)
    identity: Optional[int] = Field(default=None, ge=0)
    name: Optional[str] = None

    @model_validator(mode="after")
    def _required_fields(self) -> "GroupSpec":
        if self.kind in ("cyclic", "symmetric") and self.n is None:
            raise ValueError(f"group kind {self.kind!r} needs 'n'")
        if self.kind == "abelian" and not self.factors:
            raise ValueError("group kind 'abelian' needs 'factors'")
        if self.kind == "free_abelian" and self.rank is None:
            raise ValueError("group kind 'free_abelian' needs 'rank'")
        if self.kind == "cayley" and not self.table:
            raise ValueError("group kind 'cayley' needs 'table'")
        return self


class ClassSpec(BaseModel):
    """One ramified class: its representative u(C), r_C and the characters."""

    model_config = ConfigDict(extra="forbid")

    rep: str
    r: Optional[int] = Field(default=None, ge=1)
    chars: List[Any] = Field(default_factory=list)

    @field_validator("rep", mode="before")
    @classmethod
    def _element_literal(cls, value: Any) -> str:
        return str(value)


class RSCSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = "RSC"
    classes: List[ClassSpec] = Field(min_length=1)


class ESCItemSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    label: Optional[str] = None
    g: str
    chi: Any

    @field_validator("g", "label", mode="before")
    @classmethod
    def _as_text(cls, value: Any) -> Optional[str]:
        return None if value is None else str(value)


class ESCSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = "ESC"
    items: List[ESCItemSpec] = Field(min_length=1)


class CartanSpec(BaseModel):
    """{"A": [[2, -1], [-1, 2]], "d": [1, 1]}, optionally with q and a name."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    matrix: List[List[int]] = Field(alias="A")
    d: Optional[List[int]] = None
    q: Optional[str] = None
    name: Optional[str] = None

    @field_validator("matrix")
    @classmethod
    def _square(cls, value: List[List[int]]) -> List[List[int]]:
        if not value or any(len(row) != len(value) for row in value):
            raise ValueError("A must be a non-empty square matrix")
        return value

    @field_validator("q", mode="before")
    @classmethod
    def _scalar_literal(cls, value: Any) -> Optional[str]:
        return None if value is None else str(value)

    @model_validator(mode="after")
    def _symmetrizer_length(self) -> "CartanSpec":
        if self.d is not None and len(self.d) != len(self.matrix):
            raise ValueError(f"d must have {len(self.matrix)} entries")
        if self.d is not None and any(x <= 0 for x in self.d):
            raise ValueError("d must be positive")
        return self


class FLBlockSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    j1: List[int] = Field(min_length=1)
    j2: List[int] = Field(min_length=1)
    cartan: List[List[int]]
    d: List[int]
    q: str = "v"

    @field_validator("q", mode="before")
    @classmethod
    def _scalar_literal(cls, value: Any) -> str:
        return str(value)

    @model_validator(mode="after")
    def _sizes(self) -> "FLBlockSpec":
        n = len(self.j1)
        if len(self.j2) != n or len(self.d) != n or len(self.cartan) != n or any(len(row) != n for row in self.cartan):
            raise ValueError("j1, j2, d and the Cartan matrix of a block must have matching sizes")
        return self


class FLSpec(BaseModel):
    """The FL enrichment of the job's ESC: blocks, xi elements and r_ij as [i, j, r] triples."""

    model_config = ConfigDict(extra="forbid")

    blocks: List[FLBlockSpec] = Field(min_length=1)
    xi: List[str]
    r: List[List[int]] = Field(default_factory=list)

    @field_validator("r")
    @classmethod
    def _triples(cls, value: List[List[int]]) -> List[List[int]]:
        for triple in value:
            if len(triple) != 3 or triple[2] < 1:
                raise ValueError(f"r entries are [i, j, r] with r >= 1, got {triple}")
        return value


class CosetSpec(BaseModel):
    """An alternative coset-representative system for the class of rep."""

    model_config = ConfigDict(extra="forbid")

    rep: str
    reps: List[str] = Field(min_length=1)


class ParamsSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Optional[str] = None
    cutoff: Optional[int] = Field(default=None, ge=0)
    bound: Optional[int] = Field(default=None, ge=1)
    ramification: Dict[str, int] = Field(default_factory=dict)
    size: Optional[int] = Field(default=None, ge=1)
    m: Optional[int] = Field(default=None, ge=1)
    n: Optional[int] = Field(default=None, ge=0)
    r: Optional[int] = Field(default=None, ge=1)
    beta: Optional[str] = None
    words: int = Field(default=200, ge=1)
    length: int = Field(default=6, ge=0)
    left: Optional[str] = None
    right: Optional[str] = None
    expect: Optional[int] = Field(default=None, ge=0)

    @field_validator("ramification")
    @classmethod
    def _positive(cls, value: Dict[str, int]) -> Dict[str, int]:
        if any(r < 0 for r in value.values()):
            raise ValueError("ramification values must be non-negative")
        return value


class JobConfig(BaseModel):
    """A whole job or fixture file."""

    model_config = ConfigDict(extra="forbid")

    command: Optional[str] = None
    scalar: Literal["auto", "rational", "cyclotomic", "rational_function"] = "auto"
    group: Optional[GroupSpec] = None
    rsc: Optional[RSCSpec] = None
    esc: Optional[ESCSpec] = None
    cartan: Optional[CartanSpec] = None
    fl: Optional[FLSpec] = None
    cosets: List[CosetSpec] = Field(default_factory=list)
    params: ParamsSpec = Field(default_factory=ParamsSpec)
    format: Literal["text", "json"] = "text"

    @model_validator(mode="after")
    def _structure(self) -> "JobConfig":
        if (self.rsc is not None or self.esc is not None) and self.group is None:
            raise ValueError("rsc and esc sections need a group section")
        if self.fl is not None and self.esc is None:
            raise ValueError("the fl section enriches the esc section, which is missing")
        if self.rsc is not None and self.esc is not None:
            raise ValueError("give either rsc or esc, not both")
        return self

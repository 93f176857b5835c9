from pydantic import BaseModel, ConfigDict, Field

from cskit.config import SCHEMA_VERSION


class Artifact(BaseModel):
    """Base of every serialized artifact; dumps carry "schema": <version>."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")

    def to_json_dict(self) -> dict:
        return self.model_dump(by_alias=True, mode="json")


class ClassificationRecord(Artifact):
    index: int
    type: str
    one_line: str | None = None
    canonical_reduced_word: list[int]
    length: int
    support: list[int]
    left_descents: list[int]
    is_toric: bool
    is_coxeter: bool
    spherical_levis: list[list[int]]
    spherical_relaxed_levis: list[list[int]]
    smooth: str
    rationally_smooth: bool
    inverse_smooth: str
    poincare_coeffs: list[int]
    interval_size: int
    coatoms: int
    boolean_interval: bool


class SphericalVerdictOut(Artifact):
    J: list[int]
    holds: bool
    relaxed: bool = False
    coxeter_part_word: list[int] | None = None
    l_w: int
    l_w0J: int
    l_c: int
    dim_condition: bool


class InspectOut(Artifact):
    type: str
    word: list[int] | None = None
    reduced: bool | None = None
    record: ClassificationRecord | None = None
    verdicts: list[SphericalVerdictOut] = []


class IntervalNode(BaseModel):
    id: int
    word: list[int]
    length: int


class IntervalOut(Artifact):
    type: str
    top: list[int]
    parabolic: list[int] = []
    nodes: list[IntervalNode]
    edges: list[tuple[int, int]]


class VerifyReport(Artifact):
    property: str
    type: str
    checked: int
    skipped: int = 0
    counterexamples: list[str] = []
    passed: bool

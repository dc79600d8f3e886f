from typing import List, Literal, Optional

from pydantic import BaseModel, Field

# Fractions are carried as exact "p/q" strings (integers as "p"), words as index lists.
FracStr = str

SUITES = ("pairing-bound", "prop31", "thm32", "thm42", "invariants", "witnesses")


class SystemModel(BaseModel):
    kind: str
    rank: int


class EntryModel(BaseModel):
    word: List[int]
    weight: List[FracStr]


class ExpectedModel(BaseModel):
    case: str
    silent: bool
    scale: int
    weights: List[List[FracStr]] = Field(default_factory=list)
    word: Optional[List[int]] = None


class MinimalSetModel(BaseModel):
    system: SystemModel
    r: int
    scale: int = Field(description="k such that k * varpi_r is integral")
    coset_count: int
    admitting_count: int
    entries: List[EntryModel]
    expected: ExpectedModel
    match: Optional[bool] = Field(description="None when no closed form applies")
    mismatches: List[str] = Field(default_factory=list)


class CoxeterRowModel(BaseModel):
    word: List[int]
    lemma41: bool
    admits: bool
    witness: Optional[List[FracStr]] = None
    expected: Optional[bool] = None
    biconditional: bool
    rule: str
    agreement: bool
    d4_length_condition: Optional[bool] = None
    grid_agrees: Optional[bool] = None


class CoxeterTableModel(BaseModel):
    system: SystemModel
    entries: List[CoxeterRowModel]
    pattern_words: List[List[int]] = Field(default_factory=list)
    all_agree: bool


class InstanceResultModel(BaseModel):
    kind: str
    rank: int
    r: Optional[int] = None
    element: Optional[List[int]] = None
    passed: bool
    detail: str = ""


class SuiteResultModel(BaseModel):
    suite: str
    passed: bool
    instances: List[InstanceResultModel] = Field(default_factory=list)


class VerifyModel(BaseModel):
    suite: str
    max_rank: int
    passed: bool
    suites: List[SuiteResultModel]


class FundamentalWeightModel(BaseModel):
    r: int
    weight: List[FracStr]
    clearing_factor: int


class WeightsModel(BaseModel):
    system: SystemModel
    fundamental_weights: List[FundamentalWeightModel]
    highest_root: List[FracStr]
    positive_root_count: int
    weyl_group_order: int


class RunConfig(BaseModel):
    """Validated arguments of one CLI invocation."""

    command: Literal["minimal", "coxeter", "verify", "weights"]
    kind: Optional[str] = None
    rank: Optional[int] = Field(default=None, gt=0)
    r: Optional[int] = Field(default=None, gt=0)
    format: Literal["text", "json", "csv"] = "text"
    limit: int = Field(gt=0)
    workers: int = Field(default=1, gt=0)
    suite: Optional[Literal["pairing-bound", "prop31", "thm32", "thm42", "invariants", "witnesses", "all"]] = None
    max_rank: int = Field(default=5, gt=0)
    log_dir: Optional[str] = None

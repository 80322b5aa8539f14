from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

# Фиксированный порядок колонок CSV-отчёта
REPORT_COLUMNS = ["group", "n", "family", "method", "value", "branch", "millis", "match"]


class MethodOutcome(BaseModel):
    """One method evaluated on one (group, family) cell."""
    method: str
    value: Optional[int] = Field(default=None, description="None when the method was skipped.")
    branch: Optional[str] = None
    millis: float = 0.0
    note: Optional[str] = Field(default=None, description="Why the method was skipped.")

    @property
    def skipped(self) -> bool:
        return self.value is None


class VerifyRow(BaseModel):
    group: str
    n: int
    family: str
    method: str
    value: Optional[int] = None
    branch: Optional[str] = None
    millis: float
    match: bool

    model_config = ConfigDict(frozen=True)


class VerifySummary(BaseModel):
    total: int
    mismatches: int
    skipped: int = 0


class VerifyReport(BaseModel):
    """
    Cross-validation results over a slice of the built-in catalog.

    A row's match flag is shared by its whole (group, family) cell: true iff all
    values computed there agree.
    """
    max_order: int
    rows: List[VerifyRow] = Field(default_factory=list)
    summary: VerifySummary

    @classmethod
    def from_rows(cls, max_order: int, rows: List[VerifyRow]) -> "VerifyReport":
        ordered = sorted(rows, key=lambda r: (r.n, r.group, r.family, r.method))
        summary = VerifySummary(
            total=len(ordered),
            mismatches=sum(1 for r in ordered if not r.match),
            skipped=sum(1 for r in ordered if r.value is None),
        )
        return cls(max_order=max_order, rows=ordered, summary=summary)

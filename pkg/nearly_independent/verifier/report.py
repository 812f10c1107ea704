"""
Отчёты о проверке утверждений.

Запись отчёта — одна строка из полей `key=value`, разделённых пробелами, в
фиксированном порядке: statement, n, graphs_checked, verdict, witnesses,
counterexamples, clauses. Символы-разделители (пробел , ; : =) не встречаются
в graph6, поэтому строки graph6 пишутся как есть. Время проверки в запись не
попадает, чтобы записи не менялись от запуска к запуску.
"""
from enum import Enum
from typing import Dict, Iterable, List, Union

from pydantic import BaseModel, Field

Value = Union[int, str]


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


class Counterexample(BaseModel):
    graph6: str
    observed: Dict[str, Value] = Field(default_factory=dict)

    def to_field(self) -> str:
        parts = [self.graph6] + [f"{key}={value}" for key, value in self.observed.items()]
        return ":".join(parts)

    @classmethod
    def from_field(cls, text: str) -> "Counterexample":
        graph6, *pairs = text.split(":")
        observed: Dict[str, Value] = {}
        for pair in pairs:
            key, _, value = pair.partition("=")
            observed[key] = int(value) if value.lstrip("-").isdigit() else value
        return cls(graph6=graph6, observed=observed)

    def sort_key(self):
        return self.graph6, self.to_field()


class VerificationReport(BaseModel):
    statement: str
    n_min: int
    n_max: int
    graphs_checked: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)
    witnesses: List[str] = Field(default_factory=list)
    clauses: Dict[str, Verdict] = Field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def verdict(self) -> Verdict:
        return Verdict.PASS if not self.counterexamples else Verdict.FAIL

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    @property
    def n_range(self) -> str:
        return f"{self.n_min}-{self.n_max}"

    def to_record(self) -> str:
        fields = [
            ("statement", self.statement),
            ("n", self.n_range),
            ("graphs_checked", str(self.graphs_checked)),
            ("verdict", self.verdict.value),
            ("witnesses", ",".join(self.witnesses)),
            ("counterexamples", ";".join(c.to_field() for c in self.counterexamples)),
            ("clauses", ";".join(f"{name}={verdict.value}" for name, verdict in self.clauses.items())),
        ]
        return " ".join(f"{key}={value}" for key, value in fields)

    @classmethod
    def from_record(cls, line: str) -> "VerificationReport":
        fields: Dict[str, str] = {}
        for token in line.strip().split(" "):
            key, _, value = token.partition("=")
            fields[key] = value
        n_min, _, n_max = fields["n"].partition("-")
        clauses = {}
        for item in filter(None, fields.get("clauses", "").split(";")):
            name, _, verdict = item.partition("=")
            clauses[name] = Verdict(verdict)
        report = cls(
            statement=fields["statement"],
            n_min=int(n_min),
            n_max=int(n_max),
            graphs_checked=int(fields["graphs_checked"]),
            witnesses=[w for w in fields.get("witnesses", "").split(",") if w],
            counterexamples=[
                Counterexample.from_field(item) for item in fields.get("counterexamples", "").split(";") if item
            ],
            clauses=clauses,
        )
        if report.verdict.value != fields["verdict"]:
            raise ValueError(f"Вердикт {fields['verdict']} не согласуется со списком контрпримеров")
        return report


def merge_reports(reports: Iterable[VerificationReport]) -> VerificationReport:
    """Сводит отчёты одного утверждения по разным порядкам; списки сортируются для стабильного вывода."""
    reports = list(reports)
    if not reports:
        raise ValueError("Нечего объединять: список отчётов пуст")
    statements = {report.statement for report in reports}
    if len(statements) != 1:
        raise ValueError(f"Нельзя объединить отчёты разных утверждений: {sorted(statements)}")

    clauses: Dict[str, Verdict] = {}
    for report in reports:
        for name, verdict in report.clauses.items():
            if clauses.get(name) is not Verdict.FAIL:
                clauses[name] = verdict
    counterexamples = sorted(
        (c for report in reports for c in report.counterexamples), key=Counterexample.sort_key
    )
    return VerificationReport(
        statement=reports[0].statement,
        n_min=min(report.n_min for report in reports),
        n_max=max(report.n_max for report in reports),
        graphs_checked=sum(report.graphs_checked for report in reports),
        counterexamples=counterexamples,
        witnesses=sorted({w for report in reports for w in report.witnesses}),
        clauses=clauses,
        elapsed=sum(report.elapsed for report in reports),
    )

"""The regression corpus: named ideals with frozen expected classifications.

Line format (diff-friendly):  name ; ideal ; expected_class ; [p,q,r,mu0,mu1]
The bracketed numbers are optional; '#' starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .classify import InvariantReport, classify
from .fields import QQ
from .monomials import parse_ideal


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    ideal_text: str
    expected_class: str
    expected_numbers: tuple[int, int, int, int, int] | None = None

    def to_line(self) -> str:
        parts = [self.name, self.ideal_text, self.expected_class]
        if self.expected_numbers is not None:
            parts.append("[" + ",".join(str(v) for v in self.expected_numbers) + "]")
        return " ; ".join(parts)


def parse_corpus(text: str) -> list[CorpusEntry]:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(";")]
        if len(parts) not in (3, 4):
            raise ValueError(
                f"corpus line {lineno}: expected 'name ; ideal ; class ; [numbers]'"
            )
        numbers = None
        if len(parts) == 4 and parts[3]:
            inner = parts[3].strip()
            if not (inner.startswith("[") and inner.endswith("]")):
                raise ValueError(f"corpus line {lineno}: numbers must be bracketed")
            vals = [int(v) for v in inner[1:-1].split(",")]
            if len(vals) != 5:
                raise ValueError(
                    f"corpus line {lineno}: expected five numbers p,q,r,mu0,mu1"
                )
            numbers = tuple(vals)
        entries.append(CorpusEntry(parts[0], parts[1], parts[2], numbers))
    return entries


def shipped_corpus_text() -> str:
    return resources.files("trikoszul").joinpath("data/corpus.txt").read_text()


def load_corpus(path: str | None = None) -> list[CorpusEntry]:
    if path is None:
        return parse_corpus(shipped_corpus_text())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_corpus(fh.read())


@dataclass
class CorpusResult:
    entry: CorpusEntry
    report: InvariantReport | None
    error: str | None
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.error is None and not self.mismatches


def run_corpus(entries: list[CorpusEntry], field=QQ) -> list[CorpusResult]:
    results = []
    for entry in entries:
        try:
            ideal = parse_ideal(entry.ideal_text)
            report = classify(ideal, field=field)
        except Exception as exc:  # per-entry failures are reported, not raised
            results.append(CorpusResult(entry, None, f"{type(exc).__name__}: {exc}", ()))
            continue
        mism = []
        got = report.cls.display()
        if got != entry.expected_class:
            mism.append(f"class: expected {entry.expected_class}, got {got}")
        if entry.expected_numbers is not None:
            expect = entry.expected_numbers
            actual = (
                report.p,
                report.q,
                report.r,
                report.mu[0],
                report.mu[1],
            )
            if tuple(actual) != expect:
                mism.append(f"numbers: expected {expect}, got {tuple(actual)}")
        results.append(CorpusResult(entry, report, None, tuple(mism)))
    return results

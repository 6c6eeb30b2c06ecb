"""
Machine-readable JSON documents for ideals, primes and analysis reports.

Every document is a JSON object with ``"format": 1`` and a ``"kind"`` field
that selects its schema. :func:`to_json` serializes any supported object;
:func:`from_json` validates a document and rebuilds the object. The models
are pydantic models, so a malformed document surfaces as a
:class:`~monideal.errors.SchemaError` naming the offending field.

Examples
--------
>>> from monideal.base import Ring, MonomialIdeal
>>> from monideal.formats import to_json, from_json
>>> I = MonomialIdeal.from_exponents(Ring(("x", "y")), [[2, 0], [1, 1]])
>>> from_json(to_json(I)) == I
True
"""

from dataclasses import dataclass
from functools import singledispatch
from typing import Annotated, FrozenSet, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, TypeAdapter, ValidationError, model_validator

from .base import MAX_EXPONENT, MonomialIdeal, MonomialPrime, Ring
from .decomposition import Decomposition, IrreducibleComponent
from .errors import SchemaError
from .persistence import (
    ColonPattern,
    FamilyReport,
    FluctuationKind,
    FluctuationVerdict,
    SpiReport,
    detect_fluctuation,
    observed_spi,
)

FORMAT_VERSION = 1

Exponent = Annotated[int, Field(ge=0, le=MAX_EXPONENT)]
Label = Literal["eq", "neq"]
Triple = Tuple[PositiveInt, PositiveInt, PositiveInt]


@dataclass(frozen=True)
class CheckResult:
    """One named pass/fail line of a self-test or randomized check run."""

    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CheckTable:
    title: str
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


# -----------------------------------------------------------------------------
# document models

class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class _Document(_Model):
    format: Literal[1] = FORMAT_VERSION


class IdealBody(_Model):
    ring: List[str] = Field(min_length=1)
    generators: List[List[Exponent]]

    @model_validator(mode="after")
    def _rows_match_ring(self):
        for row in self.generators:
            if len(row) != len(self.ring):
                raise ValueError(f"generator {row} has {len(row)} exponents, ring has {len(self.ring)} variables")
        return self


class IdealDocument(_Document, IdealBody):
    kind: Literal["ideal"] = "ideal"


class PrimeDocument(_Document):
    kind: Literal["prime"] = "prime"
    ring: List[str] = Field(min_length=1)
    vars: List[str] = Field(min_length=1)


class DecompositionDocument(_Document):
    kind: Literal["decomposition"] = "decomposition"
    ideal: IdealBody
    components: List[List[Tuple[str, PositiveInt]]]


class PatternBody(_Model):
    fingerprint: str
    horizon: int = Field(ge=2)
    entries: List[Label]

    @model_validator(mode="after")
    def _entries_fill_horizon(self):
        if len(self.entries) != self.horizon - 1:
            raise ValueError(f"horizon {self.horizon} needs {self.horizon - 1} entries, got {len(self.entries)}")
        return self


class PatternDocument(_Document, PatternBody):
    kind: Literal["pattern"] = "pattern"


class SpiBody(_Model):
    pattern: PatternBody
    observed_spi: PositiveInt
    trailing_equal_run: NonNegativeInt
    certified: Literal[False] = False


class SpiDocument(_Document, SpiBody):
    kind: Literal["spi"] = "spi"


class FluctuationBody(_Model):
    pattern: PatternBody
    case_i: Optional[Triple] = None
    case_ii: Optional[Triple] = None
    verdict: Literal["none", "case_i", "case_ii", "both"]


class FluctuationDocument(_Document, FluctuationBody):
    kind: Literal["fluctuation"] = "fluctuation"


class AssEntry(_Model):
    s: PositiveInt
    primes: List[List[str]]


class AssPowersBody(_Model):
    ring: List[str] = Field(min_length=1)
    powers: List[AssEntry]


class AssPowersDocument(_Document, AssPowersBody):
    kind: Literal["ass_powers"] = "ass_powers"


class FamilyDocument(_Document):
    kind: Literal["family"] = "family"
    m: PositiveInt
    r: PositiveInt
    ideal: IdealBody
    spi: SpiBody
    fluctuation: FluctuationBody
    ass: AssPowersBody


class ResultRow(_Model):
    name: str
    passed: bool
    detail: str = ""


class ResultsDocument(_Document):
    kind: Literal["results"] = "results"
    title: str
    passed: bool
    results: List[ResultRow]


AnyDocument = Annotated[
    Union[
        IdealDocument,
        PrimeDocument,
        DecompositionDocument,
        PatternDocument,
        SpiDocument,
        FluctuationDocument,
        AssPowersDocument,
        FamilyDocument,
        ResultsDocument,
    ],
    Field(discriminator="kind"),
]
_DOCUMENT = TypeAdapter(AnyDocument)


# -----------------------------------------------------------------------------
# object -> body

def _ideal_body(ideal: MonomialIdeal) -> dict:
    return {"ring": list(ideal.ring.variables), "generators": ideal.matrix.tolist()}


def _pattern_body(pattern: ColonPattern) -> dict:
    return {"fingerprint": pattern.fingerprint, "horizon": pattern.horizon, "entries": pattern.labels()}


def _spi_body(report: SpiReport) -> dict:
    return {
        "pattern": _pattern_body(report.pattern),
        "observed_spi": report.observed_spi,
        "trailing_equal_run": report.trailing_equal_run,
        "certified": report.certified,
    }


def _fluctuation_body(verdict: FluctuationVerdict) -> dict:
    return {
        "pattern": _pattern_body(verdict.pattern),
        "case_i": verdict.case_i,
        "case_ii": verdict.case_ii,
        "verdict": verdict.verdict.value,
    }


def _sorted_names(primes: FrozenSet[MonomialPrime]) -> List[List[str]]:
    return [list(p.names) for p in sorted(primes, key=MonomialPrime.sort_key)]


def _ass_body(ring: Ring, scan: List[Tuple[int, FrozenSet[MonomialPrime]]]) -> dict:
    return {
        "ring": list(ring.variables),
        "powers": [{"s": s, "primes": _sorted_names(primes)} for s, primes in scan],
    }


def document_of(obj) -> _Document:
    """Build the validated document model for ``obj``."""
    return _document_of(obj)


@singledispatch
def _document_of(obj) -> _Document:
    raise TypeError(f"no JSON document for {type(obj).__name__}")


@_document_of.register
def _(ideal: MonomialIdeal) -> _Document:
    return IdealDocument(**_ideal_body(ideal))


@_document_of.register
def _(p: MonomialPrime) -> _Document:
    return PrimeDocument(ring=list(p.ring.variables), vars=list(p.names))


@_document_of.register
def _(d: Decomposition) -> _Document:
    names = d.source.ring.variables
    return DecompositionDocument(
        ideal=_ideal_body(d.source),
        components=[[(names[i], a) for i, a in c.pure_powers] for c in d.components],
    )


@_document_of.register
def _(pattern: ColonPattern) -> _Document:
    return PatternDocument(**_pattern_body(pattern))


@_document_of.register
def _(report: SpiReport) -> _Document:
    return SpiDocument(**_spi_body(report))


@_document_of.register
def _(verdict: FluctuationVerdict) -> _Document:
    return FluctuationDocument(**_fluctuation_body(verdict))


@_document_of.register
def _(scan: list) -> _Document:
    # an ass_powers scan: [(s, frozenset of primes), ...]
    if not scan or not all(isinstance(primes, frozenset) and primes for _, primes in scan):
        raise TypeError("only non-empty Ass scans serialize as lists")
    ring = next(iter(scan[0][1])).ring
    return AssPowersDocument(**_ass_body(ring, scan))


@_document_of.register
def _(report: FamilyReport) -> _Document:
    return FamilyDocument(
        m=report.m,
        r=report.r,
        ideal=_ideal_body(report.ideal),
        spi=_spi_body(report.spi),
        fluctuation=_fluctuation_body(report.fluctuation),
        ass=_ass_body(report.ideal.ring, report.ass),
    )


@_document_of.register
def _(table: CheckTable) -> _Document:
    return ResultsDocument(
        title=table.title,
        passed=table.passed,
        results=[ResultRow(name=r.name, passed=r.passed, detail=r.detail) for r in table.results],
    )


def to_json(obj) -> str:
    """Serialize ``obj`` as a JSON document; identical objects give identical text."""
    return document_of(obj).model_dump_json(indent=2)


# -----------------------------------------------------------------------------
# document -> object

def _ring_of(names: List[str]) -> Ring:
    return Ring(tuple(names))


def _ideal_of(body: IdealBody) -> MonomialIdeal:
    return MonomialIdeal.from_exponents(_ring_of(body.ring), body.generators)


def _pattern_of(body: PatternBody) -> ColonPattern:
    return ColonPattern(body.fingerprint, body.horizon, tuple(e == "eq" for e in body.entries))


def _spi_of(body: SpiBody) -> SpiReport:
    report = observed_spi(_pattern_of(body.pattern))
    stored = (body.observed_spi, body.trailing_equal_run)
    if stored != (report.observed_spi, report.trailing_equal_run):
        raise ValueError(
            f"observed_spi and trailing_equal_run {stored} disagree with the pattern, "
            f"which gives {(report.observed_spi, report.trailing_equal_run)}"
        )
    return report


def _fluctuation_of(body: FluctuationBody) -> FluctuationVerdict:
    verdict = detect_fluctuation(_pattern_of(body.pattern))
    stored = (body.case_i, body.case_ii)
    if stored != (verdict.case_i, verdict.case_ii):
        raise ValueError(
            f"witnesses {stored} disagree with the pattern, "
            f"which gives {(verdict.case_i, verdict.case_ii)}"
        )
    if verdict.verdict is not FluctuationKind(body.verdict):
        raise ValueError(f"verdict {body.verdict!r} disagrees with the witnesses")
    return verdict


def _ass_of(body: AssPowersBody) -> List[Tuple[int, FrozenSet[MonomialPrime]]]:
    ring = _ring_of(body.ring)
    return [
        (entry.s, frozenset(MonomialPrime.from_names(ring, names) for names in entry.primes))
        for entry in body.powers
    ]


def _object_of(doc: _Document):
    if isinstance(doc, IdealDocument):
        return _ideal_of(doc)
    if isinstance(doc, PrimeDocument):
        return MonomialPrime.from_names(_ring_of(doc.ring), doc.vars)
    if isinstance(doc, DecompositionDocument):
        ideal = _ideal_of(doc.ideal)
        ring = ideal.ring
        components = tuple(
            IrreducibleComponent(ring, tuple((ring.index(name), a) for name, a in powers))
            for powers in doc.components
        )
        return Decomposition(ideal, components)
    if isinstance(doc, PatternDocument):
        return _pattern_of(doc)
    if isinstance(doc, SpiDocument):
        return _spi_of(doc)
    if isinstance(doc, FluctuationDocument):
        return _fluctuation_of(doc)
    if isinstance(doc, AssPowersDocument):
        return _ass_of(doc)
    if isinstance(doc, FamilyDocument):
        return FamilyReport(doc.m, doc.r, _ideal_of(doc.ideal), _spi_of(doc.spi),
                            _fluctuation_of(doc.fluctuation), _ass_of(doc.ass))
    return CheckTable(doc.title, tuple(CheckResult(r.name, r.passed, r.detail) for r in doc.results))


def from_json(text: str):
    """Validate a JSON document and rebuild the object it describes.

    Raises
    ------
    SchemaError
        On malformed JSON, an unknown ``kind``, a wrong ``format`` version or
        any field that violates the schema.
    """
    try:
        doc = _DOCUMENT.validate_json(text)
    except ValidationError as exc:
        raise SchemaError(f"invalid document: {exc.errors(include_url=False)[0]['msg']}", exc) from exc
    try:
        return _object_of(doc)
    except ValueError as exc:
        raise SchemaError(f"invalid document: {exc}", exc) from exc

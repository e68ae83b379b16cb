"""Persistence of proven formulas and fast evaluation from the store.

File format (version 1): a single JSON document

    {
      "format_version": 1,
      "checksum": "sha256:<hex over the canonical records payload>",
      "records": [ ... ]
    }

with every rational serialized as the string "p/q" (never a float),
polynomial coefficients ascending by degree, and components keyed by
period.  Records are kept sorted by (kind, parameters) so identical
databases serialize byte-identically; round-trips are bit-exact.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .discover import PER_COMPONENT, discover_durfee, discover_pmn, FormulaRecord
from .errors import (
    DatabaseChecksumError,
    DatabaseParseError,
    DatabaseVersionError,
    DomainError,
    RecordNotFoundError,
)
from .polys import Polynomial
from .quasipoly import QuasiPolynomial, QuasiPolynomialSum, qps_eval

DB_FORMAT_VERSION = 1

_BUILDERS: dict[str, Callable[[int, str], FormulaRecord]] = {
    "pmn": lambda m, strategy: discover_pmn(m, strategy),
    "durfee": lambda k, strategy: discover_durfee(k, strategy),
}


def _param_key(parameters: int | Iterable[int]) -> tuple[int, ...]:
    if isinstance(parameters, int):
        return (parameters,)
    return tuple(parameters)


@dataclass
class FormulaDatabase:
    """An in-memory set of formula records, at most one per (kind, parameters)."""

    version: int = DB_FORMAT_VERSION
    records: list[FormulaRecord] = field(default_factory=list)

    def get(self, kind: str, parameters: int | Iterable[int]) -> FormulaRecord | None:
        key = (kind, _param_key(parameters))
        for record in self.records:
            if (record.kind, _param_key(record.parameters)) == key:
                return record
        return None

    def add(self, record: FormulaRecord) -> None:
        if self.get(record.kind, record.parameters) is not None:
            raise DomainError(
                f"database already holds a record for {record.kind} "
                f"{record.parameters}"
            )
        self.records.append(record)
        self.records.sort(key=lambda r: (r.kind, _param_key(r.parameters)))

    def parameters_for(self, kind: str) -> list[int | tuple[int, ...]]:
        return [r.parameters for r in self.records if r.kind == kind]


def _rat_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _rat_from_str(s: str) -> Fraction:
    return Fraction(s)


def _formula_to_obj(f: QuasiPolynomialSum) -> dict:
    return {
        "shift": f.shift,
        "components": [
            {
                "period": comp.period,
                "pieces": [[_rat_to_str(c) for c in p.coeffs] for p in comp.pieces],
            }
            for comp in f.components
        ],
    }


def _formula_from_obj(obj: dict) -> QuasiPolynomialSum:
    components = tuple(
        QuasiPolynomial(
            comp["period"],
            tuple(Polynomial([_rat_from_str(c) for c in piece]) for piece in comp["pieces"]),
        )
        for comp in obj["components"]
    )
    return QuasiPolynomialSum(obj["shift"], components)


def _record_to_obj(record: FormulaRecord) -> dict:
    parameters = (
        record.parameters
        if isinstance(record.parameters, int)
        else list(record.parameters)
    )
    return {
        "kind": record.kind,
        "parameters": parameters,
        "shift": record.shift,
        "formula": _formula_to_obj(record.formula),
        "provenance": dict(record.provenance),
    }


def _record_from_obj(obj: dict) -> FormulaRecord:
    parameters = obj["parameters"]
    if isinstance(parameters, list):
        parameters = tuple(parameters)
    return FormulaRecord(
        kind=obj["kind"],
        parameters=parameters,
        shift=obj["shift"],
        formula=_formula_from_obj(obj["formula"]),
        provenance=dict(obj["provenance"]),
    )


def _payload(db: FormulaDatabase) -> str:
    return json.dumps(
        {
            "format_version": db.version,
            "records": [_record_to_obj(r) for r in db.records],
        },
        sort_keys=True,
        separators=(",", ":"),
    )


def _checksum(payload: str) -> str:
    return "sha256:" + hashlib.sha256(payload.encode("utf-8")).hexdigest()


def save_database(db: FormulaDatabase, path: str) -> None:
    """Write atomically: temp file in the target directory, then rename."""
    payload = _payload(db)
    document = {
        "format_version": db.version,
        "checksum": _checksum(payload),
        "records": [_record_to_obj(r) for r in db.records],
    }
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".qpartition-", dir=directory)
    try:
        with os.fdopen(fd, "w") as handle:
            json.dump(document, handle, sort_keys=True, separators=(",", ":"))
            handle.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_database(path: str) -> FormulaDatabase:
    """Load and validate; version, parse and checksum problems are reported
    as distinct error types and never yield a partial database."""
    try:
        with open(path, "r") as handle:
            text = handle.read()
    except OSError as exc:
        raise DatabaseParseError(f"cannot read database file {path}: {exc}")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatabaseParseError(f"database file {path} is not valid JSON: {exc}")
    if not isinstance(document, dict) or "format_version" not in document:
        raise DatabaseParseError(f"database file {path} lacks a format_version")
    version = document["format_version"]
    if version != DB_FORMAT_VERSION:
        raise DatabaseVersionError(
            f"database file {path} has format version {version!r}; "
            f"this build reads version {DB_FORMAT_VERSION}"
        )
    try:
        records = [_record_from_obj(obj) for obj in document["records"]]
        db = FormulaDatabase(version=version, records=[])
        for record in records:
            db.add(record)
    except (KeyError, TypeError, ValueError, DomainError) as exc:
        raise DatabaseParseError(f"database file {path} is malformed: {exc}")
    stored = document.get("checksum")
    if not isinstance(stored, str):
        raise DatabaseParseError(f"database file {path} lacks a checksum")
    actual = _checksum(_payload(db))
    if stored != actual:
        raise DatabaseChecksumError(
            f"database file {path} failed its checksum "
            f"(stored {stored}, computed {actual})"
        )
    return db


def build_database(
    kind: str,
    m_max: int,
    strategy: str = PER_COMPONENT,
    path: str | None = None,
    progress: Callable[[int], None] | None = None,
    jobs: int = 1,
) -> FormulaDatabase:
    """Discover and store formulas for parameters 1..m_max.

    When a path is given the database is written after every new record, so
    an aborted long build keeps its completed entries and a rerun resumes.
    """
    if kind not in _BUILDERS:
        raise DomainError(f"unknown database kind {kind!r}; use 'pmn' or 'durfee'")
    if m_max < 1:
        raise DomainError("the parameter bound must be >= 1")
    if path is not None and os.path.exists(path):
        db = load_database(path)
    else:
        db = FormulaDatabase()
    todo = [i for i in range(1, m_max + 1) if db.get(kind, i) is None]
    builder = _BUILDERS[kind]
    if jobs > 1 and len(todo) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {i: pool.submit(builder, i, strategy) for i in todo}
            for i in todo:
                db.add(futures[i].result())
                if path is not None:
                    save_database(db, path)
                if progress is not None:
                    progress(i)
    else:
        for i in todo:
            db.add(builder(i, strategy))
            if path is not None:
                save_database(db, path)
            if progress is not None:
                progress(i)
    return db


_POWER_OF_TEN = re.compile(r"^10\^(\d+)$")


def parse_count(text: int | str) -> int:
    """Accept a non-negative integer as int, decimal string, or 10^K shorthand."""
    if isinstance(text, int):
        value = text
    else:
        text = text.strip()
        match = _POWER_OF_TEN.match(text)
        if match:
            value = 10 ** int(match.group(1))
        elif text.isdigit():
            value = int(text)
        else:
            raise DomainError(
                f"cannot parse {text!r} as a count (use digits or 10^K)"
            )
    if value < 0:
        raise DomainError("n must be >= 0")
    return value


def eval_from_db(
    db: FormulaDatabase, kind: str, parameter: int, n: int | str
) -> int:
    """Evaluate the stored formula for (kind, parameter) at n (shift-aware)."""
    record = db.get(kind, parameter)
    if record is None:
        available = db.parameters_for(kind)
        raise RecordNotFoundError(
            f"no {kind} record for parameter {parameter}; "
            f"available: {available if available else 'none'}"
        )
    return qps_eval(record.formula, parse_count(n))

"""Catalog files: named parameter sets with optional expected classifications.

A catalog is a UTF-8 INI-style document, one section per entry.  Section
names are entry names; keys are flat ``key = value`` pairs with rationals
written as ``p/q``:

    [family-4.2]
    n = 3
    r = 2
    l = 2
    vol_v = 8
    expect_a = 11/56

Recognized keys: ``n`` (integer >= 2), ``r``, ``l``, ``vol_v`` (optional,
default 1), and the optional expectations ``expect_a`` (the entry must reduce
to a pair with exactly this coefficient) and ``expect_destabilizer``
(``zero-section`` or ``infinity-section``; the entry must be K-unstable with
exactly this destabilizer).  Entries without expectations are report-only.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .exactmath import as_rational
from .geometry import Construction
from .invariants import InvariantReport, KUnstable, ReducesToPair, report
from .nef import HorizontalDivisor

__all__ = ["CatalogError", "CatalogEntry", "EntryResult", "default_catalog_path", "load_catalog", "run_catalog"]

_KNOWN_KEYS = {"n", "r", "l", "vol_v", "expect_a", "expect_destabilizer"}


class CatalogError(Exception):
    """Malformed catalog file: syntax, unknown keys, or inadmissible parameters."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    construction: Construction
    expect_a: Fraction | None = None
    expect_destabilizer: HorizontalDivisor | None = None


@dataclass(frozen=True)
class EntryResult:
    entry: CatalogEntry
    report: InvariantReport
    passed: bool
    detail: str


def default_catalog_path() -> Path:
    """The catalog shipped with the package."""
    return Path(resources.files("fanoblowup") / "data" / "default_catalog.cfg")


def _parse_entry(name: str, section: configparser.SectionProxy) -> CatalogEntry:
    unknown = set(section) - _KNOWN_KEYS
    if unknown:
        raise CatalogError(f"entry [{name}]: unknown key(s) {sorted(unknown)}")
    for key in ("n", "r", "l"):
        if key not in section:
            raise CatalogError(f"entry [{name}]: missing required key '{key}'")
    try:
        construction = Construction(
            n=int(section["n"]),
            r=as_rational(section["r"]),
            l=as_rational(section["l"]),
            vol_v=as_rational(section.get("vol_v", "1")),
        )
        expect_a = as_rational(section["expect_a"]) if "expect_a" in section else None
    except (ValueError, ZeroDivisionError) as exc:
        raise CatalogError(f"entry [{name}]: {exc}") from exc
    expect_destab = None
    if "expect_destabilizer" in section:
        raw = section["expect_destabilizer"].strip()
        try:
            expect_destab = HorizontalDivisor(raw)
        except ValueError as exc:
            raise CatalogError(
                f"entry [{name}]: expect_destabilizer must be 'zero-section' or "
                f"'infinity-section', got {raw!r}"
            ) from exc
    return CatalogEntry(name, construction, expect_a, expect_destab)


def load_catalog(path: str | Path) -> list[CatalogEntry]:
    """Parse a catalog file into ordered entries.

    Raises CatalogError with the parser's line information on syntax errors.
    """
    parser = configparser.ConfigParser(interpolation=None, strict=True)
    try:
        with open(path, encoding="utf-8") as handle:
            parser.read_file(handle, source=str(path))
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from exc
    except configparser.Error as exc:
        raise CatalogError(f"catalog parse error: {exc}") from exc
    return [_parse_entry(name, parser[name]) for name in parser.sections()]


def _check_expectations(entry: CatalogEntry, rep: InvariantReport) -> tuple[bool, str]:
    cls = rep.classification
    if entry.expect_a is not None:
        if not isinstance(cls, ReducesToPair):
            return False, f"expected reduces-to-pair, got {cls.describe()}"
        if cls.a != entry.expect_a:
            return False, f"a = {cls.a} ≠ {entry.expect_a}"
    if entry.expect_destabilizer is not None:
        if not isinstance(cls, KUnstable):
            return False, f"expected k-unstable, got {cls.describe()}"
        if cls.destabilizer is not entry.expect_destabilizer:
            return False, (
                f"destabilizer = {cls.destabilizer.value} ≠ {entry.expect_destabilizer.value}"
            )
    return True, cls.describe()


def run_catalog(entries: list[CatalogEntry]) -> list[EntryResult]:
    """Evaluate every entry and check its expectations exactly."""
    results = []
    for entry in entries:
        rep = report(entry.construction)
        passed, detail = _check_expectations(entry, rep)
        results.append(EntryResult(entry, rep, passed, detail))
    return results

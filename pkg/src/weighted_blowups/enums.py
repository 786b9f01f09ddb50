"""Shared enums used across weighted blow-up modules."""

from enum import StrEnum


class ComponentKind(StrEnum):
    BULK = "bulk"
    DIVISOR = "divisor"


class HolonomicMode(StrEnum):
    LITERAL = "literal"
    DERIVED = "derived"


class OutputFormat(StrEnum):
    JSON = "json"
    TEXT = "text"


class ReportStatus(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class SuiteKind(StrEnum):
    ALL = "all"
    SMOOTHNESS = "smoothness"
    NESTS = "nests"
    STRATA = "strata"


class NestMethod(StrEnum):
    """How nest membership was decided."""

    INTERSECTIONS = "intersections"
    FLAGS = "flags"

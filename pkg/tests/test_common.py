"""Tests for number types, hashing, settings, errors and schema versioning."""

from fractions import Fraction

import pytest
import sympy
from pydantic import ValidationError

from weighted_blowups.arrangements.documents import BuildingSetDocument, ElementDocument
from weighted_blowups.common.hashing import input_hash
from weighted_blowups.common.numbers import (
    exact_equal,
    format_float,
    format_rational,
    parse_rational,
    sign,
    to_fraction,
    to_sympy,
)
from weighted_blowups.config import DEFAULT_SETTINGS
from weighted_blowups.documents import ConfigurationDocument, PointDocument
from weighted_blowups.errors import ChartDomainError, DomainError


class TestRational:
    """Tests for the exact rational type."""

    def test_parses_fraction_strings(self):
        """Test 'p/q' strings and integers."""
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational(-2) == Fraction(-2)
        assert parse_rational(sympy.Rational(5, 6)) == Fraction(5, 6)

    def test_rejects_floats_and_bools(self):
        """Test that inexact inputs are refused."""
        with pytest.raises(ValueError):
            parse_rational(0.5)
        with pytest.raises(ValueError):
            parse_rational(True)

    def test_formats_integers_without_denominator(self):
        """Test canonical output."""
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-1, 3)) == "-1/3"

    def test_schema_field_serializes_as_string(self):
        """Test rationals inside a document."""
        doc = ConfigurationDocument(points=[["1/2", 3], [0, "-7/5"]])
        assert doc.points[0][0] == Fraction(1, 2)
        assert doc.model_dump(mode="json")["points"] == [["1/2", "3"], ["0", "-7/5"]]

    def test_ragged_configuration_rejected(self):
        """Test points of different lengths."""
        with pytest.raises(ValidationError):
            ConfigurationDocument(points=[[1, 2], [3]])


class TestExact:
    """Tests for exact algebraic numbers."""

    def test_parses_radicals(self):
        """Test square roots in strings."""
        assert to_sympy("sqrt(2)") == sympy.sqrt(2)
        assert to_sympy("2/6") == sympy.Rational(1, 3)

    def test_rejects_symbols_and_floats(self):
        """Test that only closed-form numbers are accepted."""
        with pytest.raises(ValueError):
            to_sympy("x")
        with pytest.raises(ValueError):
            to_sympy(1.5)

    def test_equality_of_radical_forms(self):
        """Test that equal radicals in different forms compare equal."""
        assert exact_equal(sympy.sqrt(8), 2 * sympy.sqrt(2))
        assert not exact_equal(sympy.sqrt(2), sympy.Rational(141421, 100000))

    def test_sign(self):
        """Test exact sign decisions."""
        assert sign(1 - sympy.sqrt(2)) == -1
        assert sign(sympy.sqrt(2) - sympy.sqrt(2)) == 0
        assert sign("3/7") == 1

    def test_to_fraction_requires_rational(self):
        """Test that irrational values are refused."""
        assert to_fraction("6/4") == Fraction(3, 2)
        with pytest.raises(ValueError):
            to_fraction(sympy.sqrt(2))

    def test_point_document(self):
        """Test a document of exact coordinates."""
        doc = PointDocument(coords=["1/2", "sqrt(3)", 4])
        assert doc.coords[1] == sympy.sqrt(3)
        assert doc.model_dump(mode="json")["coords"] == ["1/2", "sqrt(3)", "4"]


class TestFloat:
    """Tests for float formatting."""

    def test_seventeen_significant_digits(self):
        """Test that floats are written round-trip safe."""
        assert format_float(0.1) == "0.10000000000000001"
        assert format_float(1.0) == "1"


class TestHashing:
    """Tests for input fingerprints."""

    def test_prefix_and_determinism(self):
        """Test the algorithm prefix and stable output."""
        digest = input_hash('{"dim": 2}')
        assert digest.startswith("sha256:")
        assert digest == input_hash(b'{"dim": 2}')
        assert digest != input_hash('{"dim": 3}')


class TestSettings:
    """Tests for tolerances and caps."""

    def test_defaults(self):
        """Test default values."""
        assert DEFAULT_SETTINGS.richardson_tolerance == 0.05
        assert DEFAULT_SETTINGS.holonomic_constant == Fraction(1, 2)
        assert DEFAULT_SETTINGS.fd_base_step == Fraction(1, 256)
        assert DEFAULT_SETTINGS.nest_cap == 20

    def test_frozen(self):
        """Test that settings are overridden by copy."""
        with pytest.raises(ValidationError):
            DEFAULT_SETTINGS.nest_cap = 3
        tighter = DEFAULT_SETTINGS.model_copy(update={"nest_cap": 3})
        assert tighter.nest_cap == 3
        assert DEFAULT_SETTINGS.nest_cap == 20

    def test_positive_tolerances(self):
        """Test validation of tolerances."""
        with pytest.raises(ValidationError):
            type(DEFAULT_SETTINGS)(richardson_tolerance=0)


class TestErrors:
    """Tests for the error hierarchy."""

    def test_to_dict(self):
        """Test the error payload."""
        exc = ChartDomainError("outside", "chart_domain")
        assert isinstance(exc, DomainError)
        assert exc.to_dict() == {"error": "ChartDomainError", "precondition": "chart_domain", "message": "outside"}

    def test_default_precondition(self):
        """Test that the class name stands in for a missing precondition."""
        assert DomainError("boom").precondition == "DomainError"


class TestVersioning:
    """Tests for schema versions."""

    def test_default_version(self):
        """Test the default version and compatibility."""
        doc = BuildingSetDocument(dim=2, elements=[ElementDocument(name="L", zeros=[0])])
        assert doc.schema_version == "1.0"
        assert doc.is_compatible("1.4")
        assert not doc.is_compatible("2.0")

    def test_invalid_version(self):
        """Test malformed versions."""
        with pytest.raises(ValidationError):
            BuildingSetDocument(schema_version="1", dim=2, elements=[ElementDocument(name="L", zeros=[0])])

"""Expression parsing, reports and the ``lne-lab`` command line."""

from lnelab.cli.parser import ParsedExpression, parse_curve_input

__all__ = ["ParsedExpression", "parse_curve_input"]

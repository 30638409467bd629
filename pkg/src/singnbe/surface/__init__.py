"""Surface language: parser, elaborator and printer."""

from .elaborate import elaborate
from .parser import ParseError, parse, parse_term
from .printer import print_term

__all__ = ["ParseError", "elaborate", "parse", "parse_term", "print_term"]

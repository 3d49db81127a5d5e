"""
Parser and renderer for the system notation L3(d; m_1^r_1, ..., m_s^r_s).

Exponents are optional and expand to repeated multiplicities; the total
number of multiplicities may not exceed 8. Rendering groups equal
neighbours into exponents and drops trailing zeros, so that
parse_system(render_system(x)) == x.
"""

import re
from typing import List, Tuple, Union

from ..core.lattice import make_divisor
from ..exceptions import NotationParseError, TooManyPointsError
from ..models.classes import NUM_POINTS, CurveClass, DivisorClass

_INT = re.compile(r"-?\d+")
_PREFIXES = ("L3", "l3")


class _Cursor:
    """Tiny scanner over the notation string that remembers positions."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str) -> None:
        self.skip_spaces()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            self.fail(f"expected '{token}', found '{found}'")
        self.pos += len(token)

    def integer(self) -> int:
        self.skip_spaces()
        match = _INT.match(self.text, self.pos)
        if not match:
            self.fail("expected an integer")
        self.pos = match.end()
        return int(match.group())

    def fail(self, message: str) -> None:
        raise NotationParseError(
            f"{message} at position {self.pos}", text=self.text, position=self.pos
        )


def parse_multiplicities(text: str) -> Tuple[int, List[int]]:
    """Parse the notation into (degree, unpadded multiplicity list)."""
    cursor = _Cursor(text)
    cursor.skip_spaces()
    if not any(text.startswith(prefix, cursor.pos) for prefix in _PREFIXES):
        cursor.fail("expected 'L3('")
    cursor.pos += 2
    cursor.expect("(")
    degree = cursor.integer()
    mults: List[int] = []

    if cursor.peek() in (";", ","):
        cursor.pos += 1
        while True:
            start = cursor.pos
            value = cursor.integer()
            repeat = 1
            if cursor.peek() == "^":
                cursor.pos += 1
                repeat = cursor.integer()
                if repeat < 1:
                    cursor.pos = start
                    cursor.fail("exponent must be at least 1")
            mults.extend([value] * repeat)
            if len(mults) > NUM_POINTS:
                raise TooManyPointsError(
                    f"too many points: {len(mults)} multiplicities given, "
                    f"at most {NUM_POINTS} supported"
                )
            if cursor.peek() != ",":
                break
            cursor.pos += 1

    cursor.expect(")")
    cursor.skip_spaces()
    if cursor.pos != len(text):
        cursor.fail("unexpected trailing text")
    return degree, mults


def parse_system(text: str) -> DivisorClass:
    """Parse 'L3(15; 13,10,9,7,6,3^2,2)' into a padded DivisorClass."""
    degree, mults = parse_multiplicities(text)
    return make_divisor(degree, mults)


def _group(mults: Tuple[int, ...]) -> List[str]:
    trimmed = list(mults)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    parts: List[str] = []
    index = 0
    while index < len(trimmed):
        run = 1
        while index + run < len(trimmed) and trimmed[index + run] == trimmed[index]:
            run += 1
        value = trimmed[index]
        parts.append(f"{value}^{run}" if run > 1 else f"{value}")
        index += run
    return parts


def render_system(cls: Union[DivisorClass, CurveClass], prefix: str = "L3") -> str:
    """Render a class in compact notation, e.g. 'L3(5; 4,3^3,2,1^3)'."""
    parts = _group(cls.mults)
    if not parts:
        return f"{prefix}({cls.degree})"
    return f"{prefix}({cls.degree}; {','.join(parts)})"

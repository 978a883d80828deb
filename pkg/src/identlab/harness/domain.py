"""Parameter domains for registered identities and a safe value parser."""

from __future__ import annotations

import ast
import math
import operator
from dataclasses import dataclass

__all__ = ["DomainError", "Real", "Int", "Choice", "ComplexDisc", "parse_value"]


class DomainError(ValueError):
    """A parameter lies outside its declared domain."""


@dataclass(frozen=True)
class Real:
    """Real interval; ``open_lo`` / ``open_hi`` exclude the endpoints."""

    lo: float = -math.inf
    hi: float = math.inf
    open_lo: bool = True
    open_hi: bool = True

    def coerce(self, name: str, v):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise DomainError(f"{name} must be real, got {v!r}")
        v = float(v)
        lo_ok = v > self.lo if self.open_lo else v >= self.lo
        hi_ok = v < self.hi if self.open_hi else v <= self.hi
        if not (lo_ok and hi_ok and math.isfinite(v)):
            lb = "(" if self.open_lo else "["
            rb = ")" if self.open_hi else "]"
            raise DomainError(f"{name}={v} outside {lb}{self.lo}, {self.hi}{rb}")
        return v

    def describe(self) -> str:
        lb = "(" if self.open_lo else "["
        rb = ")" if self.open_hi else "]"
        return f"real {lb}{self.lo:g}, {self.hi:g}{rb}"


@dataclass(frozen=True)
class Int:
    """Integer range ``[lo, hi]``, optionally restricted to even values."""

    lo: int = 0
    hi: int = 10**9
    even: bool = False

    def coerce(self, name: str, v):
        if isinstance(v, float) and v.is_integer():
            v = int(v)
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError(f"{name} must be an integer, got {v!r}")
        if not self.lo <= v <= self.hi:
            raise DomainError(f"{name}={v} outside [{self.lo}, {self.hi}]")
        if self.even and v % 2:
            raise DomainError(f"{name}={v} must be even")
        return v

    def describe(self) -> str:
        return f"{'even ' if self.even else ''}integer [{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class Choice:
    """One of a fixed set of strings."""

    options: tuple

    def coerce(self, name: str, v):
        if v not in self.options:
            raise DomainError(f"{name}={v!r} not one of {', '.join(map(str, self.options))}")
        return v

    def describe(self) -> str:
        return "one of " + "|".join(map(str, self.options))


@dataclass(frozen=True)
class ComplexDisc:
    """Complex number with ``|z| < radius`` (reals accepted)."""

    radius: float = math.inf

    def coerce(self, name: str, v):
        if isinstance(v, bool) or not isinstance(v, (int, float, complex)):
            raise DomainError(f"{name} must be a number, got {v!r}")
        z = complex(v)
        if not abs(z) < self.radius:
            raise DomainError(f"{name}={v} must satisfy |{name}| < {self.radius}")
        return z if z.imag else z.real

    def describe(self) -> str:
        return "complex" if math.isinf(self.radius) else f"complex |z| < {self.radius:g}"


_OPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
    ast.USub: operator.neg,
    ast.UAdd: operator.pos,
}
_NAMES = {"pi": math.pi, "e": math.e, "j": 1j}
_FUNCS = {"sqrt": math.sqrt, "log": math.log, "exp": math.exp, "sin": math.sin, "cos": math.cos, "tan": math.tan}


def _eval(node):
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)):
        return node.value
    if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
        return _OPS[type(node.op)](_eval(node.left), _eval(node.right))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _OPS:
        return _OPS[type(node.op)](_eval(node.operand))
    if isinstance(node, ast.Name) and node.id in _NAMES:
        return _NAMES[node.id]
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS and len(node.args) == 1:
        return _FUNCS[node.func.id](_eval(node.args[0]))
    raise ValueError("unsupported expression")


def parse_value(text: str):
    """Parse a command-line parameter value.

    Integers, floats, complex literals (``0.3+0.1j``) and arithmetic on
    ``pi``, ``e``, ``sqrt``, ``log``, ``exp``, ``sin``, ``cos``, ``tan``
    (e.g. ``pi/3``, ``2*pi``) are evaluated; anything else is returned
    as a string.
    """
    s = text.strip()
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        pass
    try:
        v = _eval(ast.parse(s, mode="eval"))
    except (SyntaxError, ValueError, TypeError, ZeroDivisionError):
        return s
    if isinstance(v, complex) and v.imag == 0:
        v = v.real
    return v

"""Exact evaluation of the small closed forms in m used by the claim catalog.

Formulas are strings such as ``"(2^(m+1)-1)/3"`` or ``"2^((m-1)/2)+2"``.
They may use m, n (= 2^m - 1), integers, + - * / ^ and parentheses.
Arithmetic is exact; a non-integral result or exponent is an error.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache


class FormulaError(ValueError):
    pass


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


@lru_cache(maxsize=None)
def _parse(expr: str) -> ast.expr:
    try:
        tree = ast.parse(expr.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise FormulaError(f"cannot parse {expr!r}") from exc
    return tree.body


def _eval(node, env):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise FormulaError(f"unknown name {node.id!r}")
        return Fraction(env[node.id])
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval(node.operand, env)
    if isinstance(node, ast.BinOp):
        a, b = _eval(node.left, env), _eval(node.right, env)
        if isinstance(node.op, ast.Pow):
            if b.denominator != 1 or b < 0:
                raise FormulaError(f"exponent {b} is not a nonnegative integer")
            return a ** int(b)
        op = _BINOPS.get(type(node.op))
        if op is not None:
            return op(a, b)
    raise FormulaError(f"unsupported syntax: {ast.dump(node)}")


def evaluate(expr: str, m: int) -> int:
    value = _eval(_parse(expr), {"m": m, "n": (1 << m) - 1})
    if value.denominator != 1:
        raise FormulaError(f"{expr} is not an integer at m={m} (got {value})")
    return int(value)

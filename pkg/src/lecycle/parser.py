"""Parse polynomial text such as ``"x^3 + y^3 + t*x*y"``.

Grammar: identifiers for ring variables, integer literals, ``+ - * /``,
``^`` with a non-negative integer exponent, and parentheses.  Division is
only allowed by a non-zero constant, which is how rational literals like
``1/2`` are written.  Implicit multiplication (``2x``) is rejected.
"""

import ast
import re

from .errors import ParseError
from .poly import Polynomial, QQ, Ring

_ALLOWED_CHARS = re.compile(r"[A-Za-z0-9_+\-*/^() \t]*")


def parse(text: str, ring: Ring) -> Polynomial:
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty polynomial", 0)
    m = _ALLOWED_CHARS.match(text)
    if m.end() != len(text):
        raise ParseError(f"unexpected character {text[m.end()]!r}", m.end())
    if "**" in text:
        raise ParseError("use '^' for powers", text.index("**"))
    if "//" in text:
        raise ParseError("unexpected '//'", text.index("//"))
    # '^' and '**' have the same width, so column offsets are preserved.
    source = text.replace("^", "**")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        pos = (exc.offset - 1) if exc.offset else None
        raise ParseError(f"syntax error: {exc.msg}", pos) from None
    return _Builder(ring).visit(tree.body)


class _Builder:
    def __init__(self, ring):
        self.ring = ring

    def visit(self, node):
        method = getattr(self, "visit_" + type(node).__name__, None)
        if method is None:
            raise ParseError(f"unsupported construct {type(node).__name__}", node.col_offset)
        return method(node)

    def visit_Constant(self, node):
        if type(node.value) is not int:
            raise ParseError(f"bad literal {node.value!r}", node.col_offset)
        return self.ring.const(node.value)

    def visit_Name(self, node):
        if node.id not in self.ring.variables:
            raise ParseError(f"unknown variable {node.id!r}", node.col_offset)
        return self.ring.var(node.id)

    def visit_UnaryOp(self, node):
        operand = self.visit(node.operand)
        if isinstance(node.op, ast.USub):
            return -operand
        if isinstance(node.op, ast.UAdd):
            return operand
        raise ParseError("unsupported unary operator", node.col_offset)

    def visit_BinOp(self, node):
        op = node.op
        if isinstance(op, ast.Pow):
            base = self.visit(node.left)
            exp = self._exponent(node.right)
            return base ** exp
        left = self.visit(node.left)
        right = self.visit(node.right)
        if isinstance(op, ast.Add):
            return left + right
        if isinstance(op, ast.Sub):
            return left - right
        if isinstance(op, ast.Mult):
            return left * right
        if isinstance(op, ast.Div):
            if not right.is_constant() or right.is_zero():
                raise ParseError("division only by a non-zero constant", node.right.col_offset)
            return left.scale(1 / QQ(right.constant_term()))
        raise ParseError("unsupported operator", node.col_offset)

    def _exponent(self, node):
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return node.value
        raise ParseError("exponent must be a non-negative integer literal", node.col_offset)

"""Arithmetic claims DSL: parse, evaluate exactly, and audit.

One claim per line (``#`` starts a comment):

    claim <name>: <expr> == <expr> expect=(holds|fails) [cite="<text>"]

Expressions are exact integer arithmetic over literals with ``+``,
binary and unary ``-``, ``*`` and parentheses; no floats, no variables.
Whitespace within a line is insignificant.  ``expect=fails`` marks an
identity recorded from a source text that is arithmetically false; the
audit passes when it indeed fails.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .errors import ParseError

__all__ = [
    "AuditReport",
    "BinOp",
    "Claim",
    "EVAL_GUARD",
    "IntLit",
    "Neg",
    "Verdict",
    "evaluate",
    "evaluate_claims",
    "format_claims",
    "parse_claims",
]

# Claim arithmetic concerns double-digit censuses; anything this large is
# a malformed input, not a census.
EVAL_GUARD = 10**12


@dataclass(frozen=True, slots=True)
class IntLit:
    value: int


@dataclass(frozen=True, slots=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True, slots=True)
class BinOp:
    op: str  # '+', '-' or '*'
    left: "Expr"
    right: "Expr"


Expr = Union[IntLit, Neg, BinOp]


@dataclass(frozen=True, slots=True)
class Claim:
    name: str
    lhs: Expr
    rhs: Expr
    expect_holds: bool
    cite: str = ""


@dataclass(frozen=True, slots=True)
class Verdict:
    name: str
    holds: bool
    lhs_value: int
    rhs_value: int
    expect_holds: bool
    cite: str = ""

    @property
    def as_expected(self) -> bool:
        return self.holds == self.expect_holds


@dataclass(frozen=True, slots=True)
class AuditReport:
    """Verdicts plus free-form findings; exit_status is 0 only when every
    claim behaved as its ``expect`` marker demands."""

    verdicts: tuple[Verdict, ...]
    findings: tuple[str, ...] = field(default=())

    @property
    def exit_status(self) -> int:
        return 0 if all(v.as_expected for v in self.verdicts) else 1


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([()+\-*])|(\S))")


class _ExprParser:
    """Recursive-descent parser over one line's expression region."""

    def __init__(self, text: str, lineno: int, offset: int):
        self.text = text
        self.lineno = lineno
        self.offset = offset  # column of text[0] in the original line, 0-based
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._tokenize()
        self.index = 0

    def _tokenize(self):
        pos = 0
        while pos < len(self.text):
            m = _TOKEN_RE.match(self.text, pos)
            if not m or m.end() == pos:
                break
            if m.group(1):
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2):
                self.tokens.append(("op", m.group(2), m.start(2)))
            else:
                self._fail(f"unexpected character {m.group(3)!r}", m.start(3))
            pos = m.end()

    def _fail(self, message: str, col_in_text: int):
        raise ParseError(message, line=self.lineno, column=self.offset + col_in_text + 1)

    def _peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _next(self):
        tok = self._peek()
        if tok is None:
            self._fail("unexpected end of expression", len(self.text))
        self.index += 1
        return tok

    def parse(self) -> Expr:
        expr = self._sum()
        tok = self._peek()
        if tok is not None:
            self._fail(f"trailing token {tok[1]!r}", tok[2])
        return expr

    def _sum(self) -> Expr:
        expr = self._term()
        while True:
            tok = self._peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self._next()
                expr = BinOp(tok[1], expr, self._term())
            else:
                return expr

    def _term(self) -> Expr:
        expr = self._factor()
        while True:
            tok = self._peek()
            if tok and tok[0] == "op" and tok[1] == "*":
                self._next()
                expr = BinOp("*", expr, self._factor())
            else:
                return expr

    def _factor(self) -> Expr:
        tok = self._next()
        if tok[0] == "int":
            return IntLit(int(tok[1]))
        if tok[1] == "-":
            return Neg(self._factor())
        if tok[1] == "(":
            expr = self._sum()
            closing = self._next()
            if closing[1] != ")":
                self._fail(f"expected ')', got {closing[1]!r}", closing[2])
            return expr
        self._fail(f"expected integer, '-' or '(', got {tok[1]!r}", tok[2])


_CLAIM_RE = re.compile(
    r"claim\s+([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(.*?)\s*"
    r"expect\s*=\s*(holds|fails)\s*(?:cite\s*=\s*\"([^\"]*)\")?\s*$"
)


def parse_claims(text: str) -> list[Claim]:
    """Parse a claims file; ParseError carries line and column."""
    claims: list[Claim] = []
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if not stripped.startswith("claim"):
            raise ParseError(
                f"expected 'claim', got {stripped.split()[0]!r}",
                line=lineno,
                column=line.index(stripped[0]) + 1,
            )
        m = _CLAIM_RE.match(stripped)
        if not m:
            raise ParseError("malformed claim line", line=lineno, column=1)
        name, body, expect, cite = m.groups()
        if name in names:
            raise ParseError(f"duplicate claim name {name!r}", line=lineno, column=1)
        names.add(name)
        if "==" not in body:
            raise ParseError("claim needs '<expr> == <expr>'", line=lineno, column=1)
        lhs_text, _, rhs_text = body.partition("==")
        base = line.index(stripped[0]) + stripped.index(body) if body else 0
        lhs = _ExprParser(lhs_text, lineno, base).parse()
        rhs = _ExprParser(rhs_text, lineno, base + len(lhs_text) + 2).parse()
        claims.append(
            Claim(
                name=name,
                lhs=lhs,
                rhs=rhs,
                expect_holds=(expect == "holds"),
                cite=cite or "",
            )
        )
    return claims


def _format_expr(expr: Expr, parent_op: str = "", right_side: bool = False) -> str:
    if isinstance(expr, IntLit):
        return str(expr.value)
    if isinstance(expr, Neg):
        return f"-{_format_expr(expr.operand, 'neg')}"
    text = (
        f"{_format_expr(expr.left, expr.op)} {expr.op} "
        f"{_format_expr(expr.right, expr.op, right_side=True)}"
    )
    # Parenthesize exactly where the left-associative grammar would
    # otherwise regroup: any operator under a negation, sums under a
    # product, and anything on the right of an equal-precedence operator.
    if parent_op == "neg":
        needs_parens = True
    elif parent_op == "*":
        needs_parens = expr.op in "+-" or right_side
    elif parent_op in "+-":
        needs_parens = right_side and expr.op in "+-"
    else:
        needs_parens = False
    return f"({text})" if needs_parens else text


def format_claims(claims: list[Claim]) -> str:
    """Render claims back to DSL text; reparsing yields equal claims."""
    lines = []
    for c in claims:
        expect = "holds" if c.expect_holds else "fails"
        line = (
            f"claim {c.name}: {_format_expr(c.lhs)} == {_format_expr(c.rhs)} "
            f"expect={expect}"
        )
        if c.cite:
            line += f' cite="{c.cite}"'
        lines.append(line)
    return "\n".join(lines) + "\n" if lines else ""


def _eval_expr(expr: Expr) -> int:
    if isinstance(expr, IntLit):
        value = expr.value
    elif isinstance(expr, Neg):
        value = -_eval_expr(expr.operand)
    else:
        left = _eval_expr(expr.left)
        right = _eval_expr(expr.right)
        if expr.op == "+":
            value = left + right
        elif expr.op == "-":
            value = left - right
        else:
            value = left * right
    if abs(value) > EVAL_GUARD:
        raise OverflowError(
            f"claim value {value} outside guarded range +/-{EVAL_GUARD}"
        )
    return value


def evaluate(claim: Claim) -> Verdict:
    """Exact integer evaluation of both sides."""
    lhs = _eval_expr(claim.lhs)
    rhs = _eval_expr(claim.rhs)
    return Verdict(
        name=claim.name,
        holds=(lhs == rhs),
        lhs_value=lhs,
        rhs_value=rhs,
        expect_holds=claim.expect_holds,
        cite=claim.cite,
    )


def evaluate_claims(claims: list[Claim]) -> AuditReport:
    """Evaluate every claim; expected failures become findings."""
    verdicts = tuple(evaluate(c) for c in claims)
    findings = tuple(
        f"claim {v.name}: recorded identity fails as expected "
        f"({v.lhs_value} != {v.rhs_value})"
        + (f" [{v.cite}]" if v.cite else "")
        for v in verdicts
        if not v.expect_holds and not v.holds
    )
    return AuditReport(verdicts=verdicts, findings=findings)

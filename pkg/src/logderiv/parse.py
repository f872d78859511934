"""Problem-file and polynomial-expression parsing.

The problem file is a line-oriented UTF-8 format:

    ring: x, y, z
    f: x^2 - y^2*z
    gamma: x^2 + y^2 + z^2            # optional
    gamma_space: x^2; y^2; z^2        # optional, semicolon-separated basis
    theta: (x, 0, 2*z); (y^2, 0, 2*x) # optional derivation coefficient vectors
    locus: x, y                       # optional candidate locus generators

`#` starts a comment.  Expressions support + - * ^, parentheses, integer and
a/b rational literals over the declared variables.  Printing a Polynomial and
re-parsing it yields an equal Polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from logderiv.poly import Polynomial, Ring


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + where)


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()/]))"
)


def _tokenize(text, line=None):
    """Tokens as (kind, value, column); kinds: int, name, op, end."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = len(text) - len(stripped) + 1
            raise ParseError(f"unexpected character {stripped[0]!r}", line, col)
        if m.lastgroup is None:
            break
        tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup) + 1))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _ExprParser:
    """Recursive descent over + - * ^ ( ) with integer and a/b literals."""

    def __init__(self, ring, text, line=None):
        self.ring = ring
        self.line = line
        self.tokens = _tokenize(text, line)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok):
        raise ParseError(message, self.line, tok[2])

    def parse(self):
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            self.error(f"unexpected {tok[1]!r}", tok)
        return p

    def expr(self):
        tok = self.peek()
        sign = 1
        if tok[0] == "op" and tok[1] in "+-":
            self.next()
            sign = -1 if tok[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.next()
                q = self.term()
                p = p + q if tok[1] == "+" else p - q
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.next()
                p = p * self.factor()
            else:
                return p

    def factor(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.next()
            p = self.factor()
            return -p if tok[1] == "-" else p
        p = self.base()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.next()
            etok = self.next()
            if etok[0] != "int":
                self.error("exponent must be a nonnegative integer", etok)
            return p ** int(etok[1])
        return p

    def base(self):
        tok = self.next()
        if tok[0] == "int":
            num = int(tok[1])
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.next()
                dtok = self.next()
                if dtok[0] != "int":
                    self.error("malformed rational: denominator must be an integer", dtok)
                if int(dtok[1]) == 0:
                    self.error("malformed rational: zero denominator", dtok)
                return self.ring.const(Fraction(num, int(dtok[1])))
            return self.ring.const(Fraction(num))
        if tok[0] == "name":
            if tok[1] not in self.ring.names:
                self.error(f"unknown variable {tok[1]!r}", tok)
            return self.ring.var(self.ring.names.index(tok[1]))
        if tok[0] == "op" and tok[1] == "(":
            p = self.expr()
            close = self.next()
            if not (close[0] == "op" and close[1] == ")"):
                self.error("expected ')'", close)
            return p
        self.error(
            "expected a variable, literal, or '('" if tok[0] == "end"
            else f"unexpected {tok[1]!r}",
            tok,
        )


def parse_expr(ring, text, line=None):
    """One polynomial expression over the ring's variables."""
    return _ExprParser(ring, text, line).parse()


@dataclass
class ProblemFile:
    ring: Ring
    f: Polynomial | None = None
    gamma: Polynomial | None = None
    gamma_space: list = field(default_factory=list)
    theta: list = field(default_factory=list)  # list of coefficient vectors
    locus: list = field(default_factory=list)


_KEYS = ("ring", "f", "gamma", "gamma_space", "theta", "locus")


def parse_input(text):
    """Parse a whole problem file; raises ParseError with line/column."""
    ring = None
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected 'key: value'", lineno, 1)
        key, _, value = line.partition(":")
        key = key.strip()
        if key not in _KEYS:
            raise ParseError(f"unknown key {key!r}", lineno, 1)
        if key in fields or (key == "ring" and ring is not None):
            raise ParseError(f"duplicate key {key!r}", lineno, 1)
        if key == "ring":
            names = [v.strip() for v in value.split(",")]
            if any(not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v) for v in names):
                raise ParseError("malformed variable list", lineno, 1)
            try:
                ring = Ring(names)
            except ValueError as e:
                raise ParseError(str(e), lineno, 1) from None
            continue
        if ring is None:
            raise ParseError("'ring:' must come before any expression", lineno, 1)
        if key in ("f", "gamma"):
            fields[key] = parse_expr(ring, value, lineno)
        elif key == "gamma_space":
            fields[key] = [parse_expr(ring, part, lineno) for part in value.split(";")]
        elif key == "locus":
            fields[key] = [parse_expr(ring, part, lineno) for part in value.split(",")]
        elif key == "theta":
            vectors = []
            for part in value.split(";"):
                part = part.strip()
                if not (part.startswith("(") and part.endswith(")")):
                    raise ParseError("theta entries must be parenthesized tuples", lineno, 1)
                comps = _split_tuple(part[1:-1], lineno)
                vec = [parse_expr(ring, c, lineno) for c in comps]
                if len(vec) != ring.n:
                    raise ParseError(
                        f"theta vector has {len(vec)} components, expected {ring.n}",
                        lineno, 1,
                    )
                vectors.append(vec)
            fields[key] = vectors
    if ring is None:
        raise ParseError("missing 'ring:' declaration", 1, 1)
    return ProblemFile(
        ring=ring,
        f=fields.get("f"),
        gamma=fields.get("gamma"),
        gamma_space=fields.get("gamma_space", []),
        theta=fields.get("theta", []),
        locus=fields.get("locus", []),
    )


def _split_tuple(text, lineno):
    """Split on commas at parenthesis depth zero."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses", lineno, 1)
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts

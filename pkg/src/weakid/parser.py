"""Expression syntax for free-algebra polynomials.

Grammar (whitespace insignificant):

    expr   := ["-"] term { ("+"|"-") term }
    term   := factor { "*" factor }
    factor := atom [ "^" natural ]
    atom   := rational | var | "(" expr ")" | "[" expr "," expr "]"
            | "jord(" expr "," expr ")" | "S(" natural ")"
    var    := ("x"|"y") natural
    rational := natural [ "/" natural ]

"[f,g]" is the commutator, "jord(f,g)" the Jordan product, "S(n)" the
standard polynomial in x1..xn.  Variables map to generator indices by
x<N> -> 2N-1 and y<N> -> 2N, so the two families never collide.
"""

from __future__ import annotations

from fractions import Fraction

from .freealg import NcPoly, Word, commutator, jordan, standard_poly, word_key

# AST nodes: ("num", Fraction) | ("var", index) | ("add"|"sub"|"mul", a, b)
# | ("neg", a) | ("pow", a, exponent) | ("comm", a, b) | ("jord", a, b)
# | ("std", n)
ExprAst = tuple


class ParseError(ValueError):
    """Syntax error with a 0-based position into the input string."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def var_index(kind: str, num: int) -> int:
    """Generator index of x<num> (odd indices) or y<num> (even indices)."""
    if num < 1:
        raise ValueError("variable numbers start at 1")
    return 2 * num - 1 if kind == "x" else 2 * num


def var_name(index: int) -> str:
    return f"x{(index + 1) // 2}" if index % 2 else f"y{index // 2}"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.eat(ch):
            raise self.error(f"expected {ch!r}")

    def natural(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number")
        return int(self.text[start:self.pos])

    def expr(self) -> ExprAst:
        node = ("neg", self.term()) if self.eat("-") else self.term()
        while True:
            if self.eat("+"):
                node = ("add", node, self.term())
            elif self.eat("-"):
                node = ("sub", node, self.term())
            else:
                return node

    def term(self) -> ExprAst:
        node = self.factor()
        while self.eat("*"):
            node = ("mul", node, self.factor())
        return node

    def factor(self) -> ExprAst:
        node = self.atom()
        if self.eat("^"):
            at = self.pos
            e = self.natural()
            if e == 0:
                raise ParseError("exponent must be positive", at)
            node = ("pow", node, e)
        return node

    def atom(self) -> ExprAst:
        ch = self.peek()
        if ch.isdigit():
            num = self.natural()
            if self.eat("/"):
                at = self.pos
                den = self.natural()
                if den == 0:
                    raise ParseError("zero denominator", at)
                return ("num", Fraction(num, den))
            return ("num", Fraction(num))
        if ch in ("x", "y"):
            self.pos += 1
            return ("var", var_index(ch, self.natural()))
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch == "[":
            self.pos += 1
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            return ("comm", a, b)
        if self.text.startswith("jord", self.pos):
            self.pos += 4
            self.expect("(")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(")")
            return ("jord", a, b)
        if ch == "S":
            self.pos += 1
            self.expect("(")
            at = self.pos
            n = self.natural()
            if n == 0:
                raise ParseError("S(n) needs n >= 1", at)
            self.expect(")")
            return ("std", n)
        raise self.error("expected a rational, variable, or bracketed expression")


def parse_expr(text: str) -> ExprAst:
    """Parse to an AST; raises ParseError with the offending position."""
    p = _Parser(text)
    node = p.expr()
    p.skip_ws()
    if p.pos != len(text):
        raise p.error("unexpected trailing input")
    return node


def lower_expr(ast: ExprAst) -> NcPoly:
    """Lower an AST to a free-algebra polynomial."""
    tag = ast[0]
    if tag == "num":
        return NcPoly({(): ast[1]})
    if tag == "var":
        return NcPoly.gen(ast[1])
    if tag == "neg":
        return -lower_expr(ast[1])
    if tag == "add":
        return lower_expr(ast[1]) + lower_expr(ast[2])
    if tag == "sub":
        return lower_expr(ast[1]) - lower_expr(ast[2])
    if tag == "mul":
        return lower_expr(ast[1]) * lower_expr(ast[2])
    if tag == "pow":
        return lower_expr(ast[1]) ** ast[2]
    if tag == "comm":
        return commutator(lower_expr(ast[1]), lower_expr(ast[2]))
    if tag == "jord":
        return jordan(lower_expr(ast[1]), lower_expr(ast[2]))
    if tag == "std":
        # S(n) in the surface variables x1..xn
        sub = {i: var_index("x", i) for i in range(1, ast[1] + 1)}
        raw = standard_poly(ast[1])
        return NcPoly({tuple(sub[i] for i in w): c for w, c in raw.terms.items()})
    raise ValueError(f"unknown AST node {tag!r}")


def parse_poly(text: str) -> NcPoly:
    return lower_expr(parse_expr(text))


def _format_word(w: Word) -> str:
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        name = var_name(w[i])
        parts.append(name if run == 1 else f"{name}^{run}")
        i = j
    return "*".join(parts)


def format_expr(f: NcPoly) -> str:
    """Canonical parseable form: terms in degree-lex word order."""
    if f.is_zero():
        return "0"
    pieces = []
    for w, c in sorted(f.terms.items(), key=lambda t: word_key(t[0])):
        neg = c < 0
        mag = -c if neg else c
        word = _format_word(w)
        if not w:
            body = str(mag)
        elif mag == 1:
            body = word
        else:
            body = f"{mag}*{word}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)

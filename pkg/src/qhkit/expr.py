"""Parser for noncommutative polynomial expressions.

    expr  := term (('+'|'-') term)*
    term  := coeff ('*' word)? | word
    coeff := integer | integer '/' integer
    word  := gen ('^' integer)? ('*' gen ('^' integer)?)*

A leading sign is allowed.  Columns in error messages are 1-based.
"""
from __future__ import annotations

import re
from fractions import Fraction

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


class ExprError(ValueError):
    def __init__(self, message, column=None, text=None):
        self.column = column
        self.text = text
        where = f" at column {column}" if column is not None else ""
        super().__init__(f"{message}{where}" + (f" in {text!r}" if text is not None else ""))


def _tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ExprError(f"unexpected character {text[col - 1]!r}", col, text)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start + 1))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text, generators):
        self.text = text
        self.gens = {g: k for k, g in enumerate(generators)}
        self.toks = _tokens(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ExprError(msg, tok[2], self.text)

    def expect(self, kind, value=None):
        t = self.peek()
        if t[0] != kind or (value is not None and t[1] != value):
            self.fail(f"expected {value or kind}")
        return self.take()

    def expr(self):
        terms = []
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            sign = -1 if t[1] == "-" else 1
            self.take()
        terms.append(self.term(sign))
        while True:
            t = self.peek()
            if t[0] == "end":
                break
            if t[0] == "op" and t[1] in "+-":
                self.take()
                terms.append(self.term(-1 if t[1] == "-" else 1))
            else:
                self.fail("expected '+' or '-'")
        return terms

    def term(self, sign):
        t = self.peek()
        if t[0] == "int":
            self.take()
            coeff = Fraction(int(t[1]))
            if self.peek()[:2] == ("op", "/"):
                self.take()
                d = self.expect("int")
                if int(d[1]) == 0:
                    self.fail("division by zero", d)
                coeff /= int(d[1])
            if self.peek()[:2] == ("op", "*"):
                self.take()
                return sign * coeff, self.word()
            return sign * coeff, ()
        if t[0] == "name":
            return Fraction(sign), self.word()
        self.fail("expected a coefficient or a generator")

    def word(self):
        w = []
        while True:
            t = self.peek()
            if t[0] != "name":
                self.fail("expected a generator")
            if t[1] not in self.gens:
                self.fail(f"unknown generator {t[1]!r}")
            self.take()
            g = self.gens[t[1]]
            e = 1
            if self.peek()[:2] == ("op", "^"):
                self.take()
                e = int(self.expect("int")[1])
            w.extend([g] * e)
            if self.peek()[:2] == ("op", "*") and self.toks[self.k + 1][0] == "name":
                self.take()
                continue
            return tuple(w)


def parse_expression(text: str, generators) -> list:
    """Return a list of (Fraction coefficient, word) pairs, unsimplified."""
    if not isinstance(text, str) or not text.strip():
        raise ExprError("empty expression", 1, text if isinstance(text, str) else None)
    p = _Parser(text, list(generators))
    return p.expr()


def normalize(terms, field) -> tuple:
    """Collect like words, reduce coefficients into `field`, drop zeros, sort."""
    acc = {}
    for c, w in terms:
        acc[w] = field.reduce(acc.get(w, field.zero) + field(c))
    return tuple((acc[w], w) for w in sorted(acc, key=lambda w: (len(w), w)) if acc[w])


def render(terms, generators, field) -> str:
    from .algebra import word_label
    if not terms:
        return "0"
    out = []
    for k, (c, w) in enumerate(terms):
        cs = field.to_str(c)
        neg = cs.startswith("-")
        cs = cs.lstrip("-")
        if not w:
            body = cs
        elif cs == "1":
            body = word_label(generators, w)
        else:
            body = f"{cs}*{word_label(generators, w)}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def element(B, terms, generators=None):
    """Evaluate a term list in an algebra with designated generator elements."""
    from .algebra import evaluate_word
    f = B.field
    out = f.zeros(B.dim)
    for c, w in terms:
        v = evaluate_word(B, w, generators)
        c = f(c)
        out = [f.reduce(a + c * b) for a, b in zip(out, v)]
    return out

"""Parser for pair descriptions such as ``g=sl:4; h=sp:2; V=std1``.

    pair    := "g=" ambient ";" "h=" algebra ";" "V=" modexpr
    ambient := ("sl"|"so"|"sp") ":" INT
    algebra := factor ("+" factor)*
    factor  := ("sl"|"so"|"sp") ":" INT | "g2" | "f4" | "e6" | "e7" | "e8"
    modexpr := term ("(+)" term)*
    term    := atom ("(x)" atom)*
    atom    := "std" INT | "dual(" modexpr ")" | "irrep" INT "[" INT ("," INT)* "]" | "triv:" INT

Whitespace is ignored everywhere.
"""

import re

from .embedding import (
    AlgebraSpec,
    Dual,
    EmbeddingError,
    EmbeddingSpec,
    FactorSpec,
    Irrep,
    Std,
    Triv,
    dsum,
    render,
    tensor,
)


class ParseError(ValueError):
    def __init__(self, msg, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.column = col


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, lit):
        self.skip()
        return self.text.startswith(lit, self.pos)

    def eat(self, lit):
        if not self.peek(lit):
            self.fail(f"expected {lit!r}")
        self.pos += len(lit)

    def fail(self, msg):
        raise ParseError(msg, self.text, self.pos)

    def int(self):
        self.skip()
        m = re.compile(r"-?\d+").match(self.text, self.pos)
        if not m:
            self.fail("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def word(self):
        self.skip()
        m = re.compile(r"[a-z][a-z0-9]*").match(self.text, self.pos)
        if not m:
            self.fail("expected a name")
        return m

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            self.fail("unexpected trailing input")

    def ambient(self):
        start = self.pos
        m = self.word()
        if m.group() not in ("sl", "so", "sp"):
            self.pos = start
            self.skip()
            self.fail("ambient must be sl, so or sp")
        self.pos = m.end()
        self.eat(":")
        return m.group(), self.int()

    def factor(self):
        self.skip()
        start = self.pos
        m = self.word()
        name = m.group()
        self.pos = m.end()
        try:
            if name in ("g2", "f4", "e6", "e7", "e8"):
                return FactorSpec(name)
            if name in ("sl", "so", "sp"):
                self.eat(":")
                return FactorSpec(name, self.int())
        except EmbeddingError as e:
            raise ParseError(str(e), self.text, start) from None
        self.pos = start
        self.fail(f"unknown algebra {name!r}")

    def algebra(self):
        fs = [self.factor()]
        while self.peek("+"):
            self.eat("+")
            fs.append(self.factor())
        return AlgebraSpec(fs)

    def modexpr(self):
        terms = [self.term()]
        while self.peek("(+)"):
            self.eat("(+)")
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else dsum(*terms)

    def term(self):
        atoms = [self.atom()]
        while self.peek("(x)"):
            self.eat("(x)")
            atoms.append(self.atom())
        return atoms[0] if len(atoms) == 1 else tensor(*atoms)

    def atom(self):
        self.skip()
        if self.peek("dual"):
            self.eat("dual")
            self.eat("(")
            inner = self.modexpr()
            self.eat(")")
            return Dual(inner)
        if self.peek("std"):
            self.eat("std")
            return Std(self.int())
        if self.peek("irrep"):
            self.eat("irrep")
            i = self.int()
            self.eat("[")
            labels = [self.int()]
            while self.peek(","):
                self.eat(",")
                labels.append(self.int())
            self.eat("]")
            return Irrep(i, tuple(labels))
        if self.peek("triv"):
            self.eat("triv")
            self.eat(":")
            return Triv(self.int())
        self.fail("expected std, irrep, triv or dual(...)")


def parse_algebra(text):
    p = _Parser(text)
    a = p.algebra()
    p.end()
    return a


def parse_module(text):
    p = _Parser(text)
    v = p.modexpr()
    p.end()
    return v


def parse_pair(text):
    """Parse and validate a pair description.  Returns an EmbeddingSpec."""
    p = _Parser(text)
    p.eat("g")
    p.eat("=")
    ambient, n = p.ambient()
    p.eat(";")
    p.eat("h")
    p.eat("=")
    h = p.algebra()
    p.eat(";")
    p.eat("V")
    p.eat("=")
    v_start = p.pos
    v = p.modexpr()
    p.end()
    spec = EmbeddingSpec(h, v, ambient)
    try:
        spec.weights
    except EmbeddingError as e:
        raise ParseError(str(e), text, v_start) from None
    if spec.g_size != n or (ambient == "sp" and spec.dim_v % 2):
        raise EmbeddingError(
            f"V has dimension {spec.dim_v}, which does not match g={ambient}:{n}"
            f" (expected {2 * n if ambient == 'sp' else n})"
        )
    return spec


def format_pair(spec):
    return f"g={spec.g_label}; h={spec.h}; V={render(spec.V)}"

"""Parser for the textual feature-model language.

Grammar (EBNF):

    model      := "featuremodel" IDENT feature
    feature    := ("mandatory"|"optional"|"root") IDENT card? block?
    card       := "[" INT ".." INT "]"
    block      := "{" (feature | group | attr | constraint)* "}"
    group      := ("alternative"|"or") "{" IDENT ("," IDENT)* "}"
    attr       := "attribute" IDENT ":" ("enum" "{" IDENT ("," IDENT)* "}"
                                         | "int" "[" INT ".." INT "]"
                                         | "text") ("required")?
    constraint := "constraint" IDENT ("requires"|"excludes") IDENT

Group children are declared inline by name; a later feature declaration with
the same name inside the same block elaborates the child (cardinality, nested
block, attributes). Comments run from `#` to end of line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..diagnostics import Diagnostic, error
from .model import (
    ALTERNATIVE, AND, ENUM, EXCLUDES, INT_RANGE, MANDATORY, OPTIONAL, OR,
    REQUIRES, TEXT, AttributeDecl, CrossTreeConstraint, Feature, FeatureModel,
    Group,
)

KEYWORDS = {
    "featuremodel", "root", "mandatory", "optional", "alternative", "or",
    "attribute", "constraint", "requires", "excludes", "enum", "int", "text",
    "required",
}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[^\S\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<int>\d+)
  | (?P<ident>[^\W\d_]\w*)
  | (?P<dots>\.\.)
  | (?P<punct>[{}\[\]:,])
    """,
    re.VERBOSE | re.UNICODE,
)


@dataclass(frozen=True)
class Token:
    kind: str        # "int" | "ident" | "keyword" | punctuation literal | "eof"
    text: str
    line: int
    column: int


class ModelParseError(Exception):
    def __init__(self, diagnostics: list[Diagnostic]):
        super().__init__("; ".join(str(d) for d in diagnostics))
        self.diagnostics = diagnostics


def tokenize(source: str) -> tuple[list[Token], list[Diagnostic]]:
    tokens: list[Token] = []
    diags: list[Diagnostic] = []
    line, col, pos = 1, 1, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            diags.append(error("SYNTAX", f"unexpected character {source[pos]!r}",
                               line=line, column=col))
            pos += 1
            col += 1
            continue
        kind = m.lastgroup
        text = m.group()
        if kind == "nl":
            line += 1
            col = 1
        elif kind in ("ws", "comment"):
            col += len(text)
        else:
            if kind == "ident" and text in KEYWORDS:
                kind = "keyword"
            elif kind in ("dots", "punct"):
                kind = text
            tokens.append(Token(kind, text, line, col))
            col += len(text)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens, diags


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0
        self.diags: list[Diagnostic] = []

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, code: str, message: str, tok: Token | None = None) -> None:
        tok = tok or self.peek()
        self.diags.append(error(code, message, line=tok.line, column=tok.column))
        raise ModelParseError(self.diags)

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail("SYNTAX", f"expected {what}, found {tok.text or 'end of input'!r}")
        return self.next()

    def expect_keyword(self, word: str) -> Token:
        tok = self.peek()
        if tok.kind != "keyword" or tok.text != word:
            self.fail("SYNTAX", f"expected '{word}', found {tok.text or 'end of input'!r}")
        return self.next()

    def ident(self, what: str = "identifier") -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            self.fail("SYNTAX", f"expected {what}, found {tok.text or 'end of input'!r}")
        return self.next()

    # --- productions -----------------------------------------------------

    def model(self) -> FeatureModel:
        self.expect_keyword("featuremodel")
        name = self.ident("model name").text
        tok = self.peek()
        if not (tok.kind == "keyword" and tok.text == "root"):
            self.fail("SYNTAX", "expected 'root' feature")
        constraints: list[CrossTreeConstraint] = []
        root = self.feature(constraints, is_root=True)
        tok = self.peek()
        if tok.kind != "eof":
            self.fail("SYNTAX", f"unexpected trailing input {tok.text!r}")
        return FeatureModel(name=name, root=root, constraints=constraints)

    def feature(self, constraints: list[CrossTreeConstraint],
                is_root: bool = False) -> Feature:
        kw = self.next()  # mandatory | optional | root
        variability = OPTIONAL if kw.text in ("optional", "root") else MANDATORY
        name_tok = self.ident("feature name")
        card = (1, 1)
        if self.peek().kind == "[":
            card = self.card()
            if is_root and card != (1, 1):
                self.fail("ROOT_CARD", "root cardinality must be [1..1]", name_tok)
        feat = Feature(name=name_tok.text, variability=variability, card=card)
        if self.peek().kind == "{":
            self.block(feat, constraints)
        return feat

    def card(self) -> tuple[int, int]:
        self.expect("[", "'['")
        lo_tok = self.expect("int", "integer")
        self.expect("..", "'..'")
        hi_tok = self.expect("int", "integer")
        self.expect("]", "']'")
        lo, hi = int(lo_tok.text), int(hi_tok.text)
        if lo > hi:
            self.fail("MIN_GT_MAX", f"cardinality [{lo}..{hi}] has min > max", lo_tok)
        if hi < 1:
            self.fail("MAX_LT_ONE", f"cardinality [{lo}..{hi}] has max < 1", hi_tok)
        return lo, hi

    def block(self, feat: Feature, constraints: list[CrossTreeConstraint]) -> None:
        self.expect("{", "'{'")
        # group children of this block awaiting elaboration
        pending: dict[str, Feature] = {}
        while True:
            tok = self.peek()
            if tok.kind == "}":
                self.next()
                return
            if tok.kind == "eof":
                self.fail("SYNTAX", "unexpected end of input inside block")
            if tok.kind != "keyword":
                self.fail("SYNTAX", f"unexpected {tok.text!r} in block")
            if tok.text in ("mandatory", "optional"):
                save = self.pos
                self.next()
                name = self.ident("feature name").text
                if name in pending:
                    self.elaborate(pending.pop(name), constraints)
                else:
                    self.pos = save
                    child = self.feature(constraints)
                    self.append_and_child(feat, child)
            elif tok.text in ("alternative", "or"):
                self.next()
                kind = ALTERNATIVE if tok.text == "alternative" else OR
                group = Group(kind=kind)
                self.expect("{", "'{'")
                while True:
                    child_tok = self.ident("feature name")
                    child = Feature(name=child_tok.text, variability=OPTIONAL)
                    group.children.append(child)
                    pending[child.name] = child
                    if self.peek().kind == ",":
                        self.next()
                        continue
                    break
                self.expect("}", "'}'")
                feat.groups.append(group)
            elif tok.text == "attribute":
                feat.attributes.append(self.attribute())
            elif tok.text == "constraint":
                constraints.append(self.constraint())
            elif tok.text == "root":
                self.fail("SYNTAX", "'root' is only allowed at the top level")
            else:
                self.fail("SYNTAX", f"unexpected keyword {tok.text!r} in block")

    def elaborate(self, child: Feature,
                  constraints: list[CrossTreeConstraint]) -> None:
        """Fill in card/block of a group child declared inline earlier."""
        if self.peek().kind == "[":
            child.card = self.card()
        if self.peek().kind == "{":
            self.block(child, constraints)

    @staticmethod
    def append_and_child(feat: Feature, child: Feature) -> None:
        if feat.groups and feat.groups[-1].kind == AND:
            feat.groups[-1].children.append(child)
        else:
            feat.groups.append(Group(AND, [child]))

    def attribute(self) -> AttributeDecl:
        self.expect_keyword("attribute")
        name = self.ident("attribute name").text
        self.expect(":", "':'")
        tok = self.peek()
        if tok.kind != "keyword" or tok.text not in ("enum", "int", "text"):
            self.fail("SYNTAX", "expected attribute domain (enum/int/text)")
        self.next()
        values: tuple[str, ...] = ()
        lo = hi = 0
        if tok.text == "enum":
            self.expect("{", "'{'")
            vals = [self.ident("enum literal").text]
            while self.peek().kind == ",":
                self.next()
                vals.append(self.ident("enum literal").text)
            self.expect("}", "'}'")
            values = tuple(vals)
        elif tok.text == "int":
            self.expect("[", "'['")
            lo_tok = self.expect("int", "integer")
            self.expect("..", "'..'")
            hi_tok = self.expect("int", "integer")
            self.expect("]", "']'")
            lo, hi = int(lo_tok.text), int(hi_tok.text)
            if lo > hi:
                self.fail("ATTR_RANGE", f"attribute range [{lo}..{hi}] has lo > hi", lo_tok)
        domain = {"enum": ENUM, "int": INT_RANGE, "text": TEXT}[tok.text]
        required = False
        nxt = self.peek()
        if nxt.kind == "keyword" and nxt.text == "required":
            self.next()
            required = True
        return AttributeDecl(name=name, domain=domain, required=required,
                             values=values, lo=lo, hi=hi)

    def constraint(self) -> CrossTreeConstraint:
        self.expect_keyword("constraint")
        lhs_tok = self.ident("feature name")
        tok = self.peek()
        if tok.kind != "keyword" or tok.text not in ("requires", "excludes"):
            self.fail("SYNTAX", "expected 'requires' or 'excludes'")
        self.next()
        rhs_tok = self.ident("feature name")
        if lhs_tok.text == rhs_tok.text:
            self.fail("SELF_CONSTRAINT",
                      f"constraint endpoints must differ: {lhs_tok.text}", rhs_tok)
        kind = REQUIRES if tok.text == "requires" else EXCLUDES
        return CrossTreeConstraint(kind=kind, lhs=lhs_tok.text, rhs=rhs_tok.text)


def _check_semantics(model: FeatureModel) -> list[Diagnostic]:
    diags: list[Diagnostic] = []
    seen: set[str] = set()
    for f in model.features():
        if f.name in seen:
            diags.append(error("DUPLICATE_FEATURE",
                               f"feature name {f.name!r} declared more than once"))
        seen.add(f.name)
    for c in model.constraints:
        for endpoint in (c.lhs, c.rhs):
            if endpoint not in seen:
                diags.append(error("UNKNOWN_CONSTRAINT_FEATURE",
                                   f"constraint references unknown feature {endpoint!r}"))
    return diags


def parse_model(source: str) -> FeatureModel:
    """Parse DSL source into a FeatureModel; raises ModelParseError on failure."""
    tokens, diags = tokenize(source)
    if diags:
        raise ModelParseError(diags)
    parser = _Parser(tokens)
    model = parser.model()
    semantic = _check_semantics(model)
    if semantic:
        raise ModelParseError(semantic)
    return model

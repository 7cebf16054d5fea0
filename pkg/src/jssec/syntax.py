"""Lexer, parser and expectation extraction for the JavaScript subset.

The grammar covers the classic language core: var declarations, function
declarations and expressions, calls, `new`, member/index access, assignment,
`delete`, the usual binary and unary operators, object/array literals, `this`,
and if/for/while/with/return/blocks.  Regex literals, switch, try/catch,
labels, the comma operator and literal getters/setters are not part of the
subset.

Statement termination uses a simplified newline rule instead of full ASI: a
statement ends at `;`, at `}`, at end of input, or at a newline when the next
token cannot continue the current expression.  `return` is newline-restricted
(a line break after `return` ends the statement).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LexError, ParseError

KEYWORDS = frozenset(
    "var function return new delete this if else for while with "
    "true false null undefined typeof in".split()
)

PUNCTUATORS = [
    "===", "!==", "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "{", "}", "(", ")", "[", "]", ";", ",", ".", ":",
    "=", "<", ">", "+", "-", "*", "/", "%", "!",
]

BINARY_OPS = {"+", "-", "*", "/", "%", "==", "!=", "===", "!==",
              "<", "<=", ">", ">=", "&&", "||"}


@dataclass(frozen=True)
class SourceSpan:
    """1-based source region; end column is exclusive."""

    line: int
    column: int
    end_line: int
    end_column: int

    def merge(self, other: "SourceSpan") -> "SourceSpan":
        return SourceSpan(self.line, self.column, other.end_line, other.end_column)

    def __str__(self):
        return f"{self.line}:{self.column}"


@dataclass(frozen=True)
class Token:
    kind: str  # identifier | keyword | number-literal | string-literal | punctuator | comment
    lexeme: str
    span: SourceSpan


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in "$_"


def _is_ident_char(ch: str) -> bool:
    return ch.isalnum() or ch in "$_"


def tokenize(source: str) -> list[Token]:
    """Split source into tokens, keeping comments and discarding whitespace."""
    tokens: list[Token] = []
    pos = 0
    line = 1
    col = 1
    n = len(source)

    def span_from(start_line, start_col):
        return SourceSpan(start_line, start_col, line, col)

    def advance(count=1):
        nonlocal pos, line, col
        for _ in range(count):
            if pos < n and source[pos] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            pos += 1

    while pos < n:
        ch = source[pos]
        start_line, start_col, start_pos = line, col, pos

        if ch in " \t\r\n\f\v":
            advance()
            continue

        if source.startswith("//", pos):
            while pos < n and source[pos] != "\n":
                advance()
            tokens.append(Token("comment", source[start_pos:pos],
                                span_from(start_line, start_col)))
            continue

        if source.startswith("/*", pos):
            advance(2)
            while pos < n and not source.startswith("*/", pos):
                advance()
            if pos >= n:
                raise LexError("unterminated comment", span_from(start_line, start_col))
            advance(2)
            tokens.append(Token("comment", source[start_pos:pos],
                                span_from(start_line, start_col)))
            continue

        if _is_ident_start(ch):
            while pos < n and _is_ident_char(source[pos]):
                advance()
            lexeme = source[start_pos:pos]
            kind = "keyword" if lexeme in KEYWORDS else "identifier"
            tokens.append(Token(kind, lexeme, span_from(start_line, start_col)))
            continue

        if ch.isdigit() or (ch == "." and pos + 1 < n and source[pos + 1].isdigit()):
            while pos < n and source[pos].isdigit():
                advance()
            if pos < n and source[pos] == ".":
                advance()
                while pos < n and source[pos].isdigit():
                    advance()
            if pos < n and source[pos] in "eE":
                advance()
                if pos < n and source[pos] in "+-":
                    advance()
                if pos >= n or not source[pos].isdigit():
                    raise LexError("malformed number exponent",
                                   span_from(start_line, start_col))
                while pos < n and source[pos].isdigit():
                    advance()
            tokens.append(Token("number-literal", source[start_pos:pos],
                                span_from(start_line, start_col)))
            continue

        if ch in "'\"":
            quote = ch
            advance()
            while True:
                if pos >= n or source[pos] == "\n":
                    raise LexError("unterminated string",
                                   span_from(start_line, start_col))
                if source[pos] == "\\":
                    advance(2)
                    continue
                if source[pos] == quote:
                    advance()
                    break
                advance()
            tokens.append(Token("string-literal", source[start_pos:pos],
                                span_from(start_line, start_col)))
            continue

        for punct in PUNCTUATORS:
            if source.startswith(punct, pos):
                advance(len(punct))
                tokens.append(Token("punctuator", punct,
                                    span_from(start_line, start_col)))
                break
        else:
            raise LexError(f"illegal character {ch!r}",
                           SourceSpan(start_line, start_col, start_line, start_col + 1))

    return tokens


_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", "b": "\b", "f": "\f", "v": "\v", "0": "\0"}


def decode_string_literal(lexeme: str) -> str:
    body = lexeme[1:-1]
    out = []
    i = 0
    while i < len(body):
        ch = body[i]
        if ch == "\\" and i + 1 < len(body):
            nxt = body[i + 1]
            out.append(_ESCAPES.get(nxt, nxt))
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass
class Node:
    span: SourceSpan

    @property
    def kind(self) -> str:
        return type(self).__name__


@dataclass
class Program(Node):
    body: list


@dataclass
class VarDeclarator:
    name: str
    name_span: SourceSpan
    init: Node | None


@dataclass
class VarDecl(Node):
    declarators: list


@dataclass
class FunctionDecl(Node):
    name: str
    params: list
    body: "Block"


@dataclass
class FunctionExpr(Node):
    name: str | None
    params: list
    body: "Block"


@dataclass
class Block(Node):
    body: list


@dataclass
class ExpressionStatement(Node):
    expression: Node
    synthetic: bool = False  # produced by AST rewrites; excluded from traces


@dataclass
class If(Node):
    test: Node
    then_branch: Node
    else_branch: Node | None


@dataclass
class For(Node):
    init: Node | None  # VarDecl or expression
    test: Node | None
    update: Node | None
    body: Node


@dataclass
class While(Node):
    test: Node
    body: Node


@dataclass
class With(Node):
    obj: Node
    body: Node


@dataclass
class Return(Node):
    value: Node | None


@dataclass
class Identifier(Node):
    name: str


@dataclass
class Literal(Node):
    value: object  # float, str, bool, or the null/undefined sentinels


@dataclass
class This(Node):
    pass


@dataclass
class ObjectLiteral(Node):
    entries: list  # (key: str, value: Node) in source order


@dataclass
class ArrayLiteral(Node):
    elements: list


@dataclass
class Member(Node):
    obj: Node
    prop: str
    prop_span: SourceSpan = None


@dataclass
class Index(Node):
    obj: Node
    key: Node


@dataclass
class Call(Node):
    callee: Node
    args: list


@dataclass
class New(Node):
    callee: Node
    args: list


@dataclass
class Assign(Node):
    target: Node  # Identifier, Member or Index
    value: Node


@dataclass
class Binary(Node):
    op: str
    left: Node
    right: Node


@dataclass
class Unary(Node):
    op: str  # ! - typeof ++ --
    operand: Node
    prefix: bool = True


@dataclass
class Delete(Node):
    operand: Node


def child_nodes(node: Node):
    """Yield the direct child nodes of `node`."""
    if isinstance(node, (Program, Block)):
        yield from node.body
    elif isinstance(node, VarDecl):
        for decl in node.declarators:
            if decl.init is not None:
                yield decl.init
    elif isinstance(node, (FunctionDecl, FunctionExpr)):
        yield node.body
    elif isinstance(node, ExpressionStatement):
        yield node.expression
    elif isinstance(node, If):
        yield node.test
        yield node.then_branch
        if node.else_branch is not None:
            yield node.else_branch
    elif isinstance(node, For):
        for part in (node.init, node.test, node.update, node.body):
            if part is not None:
                yield part
    elif isinstance(node, While):
        yield node.test
        yield node.body
    elif isinstance(node, With):
        yield node.obj
        yield node.body
    elif isinstance(node, Return):
        if node.value is not None:
            yield node.value
    elif isinstance(node, ObjectLiteral):
        for _, value in node.entries:
            yield value
    elif isinstance(node, ArrayLiteral):
        yield from node.elements
    elif isinstance(node, Member):
        yield node.obj
    elif isinstance(node, Index):
        yield node.obj
        yield node.key
    elif isinstance(node, (Call, New)):
        yield node.callee
        yield from node.args
    elif isinstance(node, Assign):
        yield node.target
        yield node.value
    elif isinstance(node, Binary):
        yield node.left
        yield node.right
    elif isinstance(node, Unary):
        yield node.operand
    elif isinstance(node, Delete):
        yield node.operand


def walk(node: Node):
    """Yield `node` and every descendant, depth first."""
    yield node
    for child in child_nodes(node):
        yield from walk(child)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

# undefined/null sentinels live in object_model, but the parser must produce
# literal values; imported lazily to keep this module importable on its own.
def _singletons():
    from .object_model import UNDEFINED, NULL
    return UNDEFINED, NULL


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = [t for t in tokens if t.kind != "comment"]
        self.pos = 0
        self.function_depth = 0

    # -- token helpers ------------------------------------------------------

    def peek(self, offset=0) -> Token | None:
        i = self.pos + offset
        return self.tokens[i] if i < len(self.tokens) else None

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def previous(self) -> Token:
        return self.tokens[self.pos - 1]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def check(self, lexeme: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.lexeme == lexeme and tok.kind in ("punctuator", "keyword")

    def match(self, lexeme: str) -> bool:
        if self.check(lexeme):
            self.advance()
            return True
        return False

    def expect(self, lexeme: str) -> Token:
        if not self.check(lexeme):
            self.error(f"expected {lexeme!r}")
        return self.advance()

    def error(self, message: str):
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1].span if self.tokens else SourceSpan(1, 1, 1, 1)
            raise ParseError(f"{message}, got end of input", last)
        raise ParseError(f"{message}, got {tok.lexeme!r}", tok.span)

    def end_span(self) -> SourceSpan:
        return self.previous().span

    def starts_new_line(self) -> bool:
        tok = self.peek()
        return tok is not None and self.pos > 0 and tok.span.line > self.previous().span.end_line

    def consume_statement_end(self):
        if self.match(";"):
            return
        if self.at_end() or self.check("}") or self.starts_new_line():
            return
        self.error("expected ';'")

    # -- statements ---------------------------------------------------------

    def parse_program(self) -> Program:
        start = self.peek().span if self.tokens else SourceSpan(1, 1, 1, 1)
        body = []
        while not self.at_end():
            stmt = self.parse_statement()
            if stmt is not None:
                body.append(stmt)
        end = self.tokens[-1].span if self.tokens else start
        return Program(start.merge(end), body)

    def parse_statement(self) -> Node | None:
        if self.match(";"):
            return None
        if self.check("var"):
            return self.parse_var_statement()
        if self.check("function"):
            return self.parse_function_declaration()
        if self.check("if"):
            return self.parse_if()
        if self.check("for"):
            return self.parse_for()
        if self.check("while"):
            return self.parse_while()
        if self.check("with"):
            return self.parse_with()
        if self.check("return"):
            return self.parse_return()
        if self.check("{") and not self.looks_like_object_literal():
            return self.parse_block()
        start = self.peek().span
        expr = self.parse_expression()
        self.consume_statement_end()
        return ExpressionStatement(start.merge(self.end_span()), expr)

    def looks_like_object_literal(self) -> bool:
        # `{` in statement position is a block unless it reads as `{}` or
        # `{key :`, which no block can start with (the subset has no labels).
        nxt = self.peek(1)
        if nxt is None:
            return False
        if nxt.lexeme == "}" and nxt.kind == "punctuator":
            return True
        if nxt.kind in ("identifier", "string-literal", "number-literal"):
            after = self.peek(2)
            return after is not None and after.lexeme == ":" and after.kind == "punctuator"
        return False

    def parse_var_statement(self) -> VarDecl:
        start = self.expect("var").span
        declarators = [self.parse_declarator()]
        while self.match(","):
            declarators.append(self.parse_declarator())
        self.consume_statement_end()
        return VarDecl(start.merge(self.end_span()), declarators)

    def parse_declarator(self) -> VarDeclarator:
        tok = self.peek()
        if tok is None or tok.kind != "identifier":
            self.error("expected variable name")
        self.advance()
        init = None
        if self.match("="):
            init = self.parse_assignment()
        return VarDeclarator(tok.lexeme, tok.span, init)

    def parse_function_declaration(self) -> FunctionDecl:
        start = self.expect("function").span
        name_tok = self.peek()
        if name_tok is None or name_tok.kind != "identifier":
            self.error("expected function name")
        self.advance()
        params = self.parse_params()
        body = self.parse_function_body()
        return FunctionDecl(start.merge(self.end_span()), name_tok.lexeme, params, body)

    def parse_params(self) -> list:
        self.expect("(")
        params = []
        if not self.check(")"):
            while True:
                tok = self.peek()
                if tok is None or tok.kind != "identifier":
                    self.error("expected parameter name")
                self.advance()
                params.append(tok.lexeme)
                if not self.match(","):
                    break
        self.expect(")")
        return params

    def parse_function_body(self) -> Block:
        self.function_depth += 1
        try:
            return self.parse_block()
        finally:
            self.function_depth -= 1

    def parse_block(self) -> Block:
        start = self.expect("{").span
        body = []
        while not self.check("}"):
            if self.at_end():
                self.error("expected '}'")
            stmt = self.parse_statement()
            if stmt is not None:
                body.append(stmt)
        end = self.expect("}").span
        return Block(start.merge(end), body)

    def parse_if(self) -> If:
        start = self.expect("if").span
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        then_branch = self.parse_required_statement()
        else_branch = None
        if self.match("else"):
            else_branch = self.parse_required_statement()
        return If(start.merge(self.end_span()), test, then_branch, else_branch)

    def parse_required_statement(self) -> Node:
        stmt = self.parse_statement()
        if stmt is None:
            # a bare `;` body
            return Block(self.previous().span, [])
        return stmt

    def parse_for(self) -> For:
        start = self.expect("for").span
        self.expect("(")
        init = None
        if not self.check(";"):
            if self.check("var"):
                var_start = self.advance().span
                declarators = [self.parse_declarator()]
                while self.match(","):
                    declarators.append(self.parse_declarator())
                init = VarDecl(var_start.merge(self.end_span()), declarators)
            else:
                init = self.parse_expression()
        self.expect(";")
        test = None if self.check(";") else self.parse_expression()
        self.expect(";")
        update = None if self.check(")") else self.parse_expression()
        self.expect(")")
        body = self.parse_required_statement()
        return For(start.merge(self.end_span()), init, test, update, body)

    def parse_while(self) -> While:
        start = self.expect("while").span
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        body = self.parse_required_statement()
        return While(start.merge(self.end_span()), test, body)

    def parse_with(self) -> With:
        start = self.expect("with").span
        self.expect("(")
        obj = self.parse_expression()
        self.expect(")")
        body = self.parse_required_statement()
        return With(start.merge(self.end_span()), obj, body)

    def parse_return(self) -> Return:
        start = self.expect("return").span
        if self.function_depth == 0:
            raise ParseError("'return' outside of a function", start)
        value = None
        if not (self.at_end() or self.check(";") or self.check("}")
                or self.starts_new_line()):
            value = self.parse_expression()
        self.consume_statement_end()
        return Return(start.merge(self.end_span()), value)

    # -- expressions --------------------------------------------------------

    def parse_expression(self) -> Node:
        return self.parse_assignment()

    def parse_assignment(self) -> Node:
        left = self.parse_or()
        if self.check("="):
            if not isinstance(left, (Identifier, Member, Index)):
                self.error("invalid assignment target")
            self.advance()
            right = self.parse_assignment()
            return Assign(left.span.merge(self.end_span()), left, right)
        return left

    def _binary_level(self, ops, next_level):
        left = next_level()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "punctuator" or tok.lexeme not in ops:
                return left
            op = self.advance().lexeme
            right = next_level()
            left = Binary(left.span.merge(self.end_span()), op, left, right)

    def parse_or(self) -> Node:
        return self._binary_level({"||"}, self.parse_and)

    def parse_and(self) -> Node:
        return self._binary_level({"&&"}, self.parse_equality)

    def parse_equality(self) -> Node:
        return self._binary_level({"==", "!=", "===", "!=="}, self.parse_relational)

    def parse_relational(self) -> Node:
        return self._binary_level({"<", "<=", ">", ">="}, self.parse_additive)

    def parse_additive(self) -> Node:
        return self._binary_level({"+", "-"}, self.parse_multiplicative)

    def parse_multiplicative(self) -> Node:
        return self._binary_level({"*", "/", "%"}, self.parse_unary)

    def parse_unary(self) -> Node:
        tok = self.peek()
        if tok is not None:
            if tok.lexeme in ("!", "-") and tok.kind == "punctuator":
                self.advance()
                operand = self.parse_unary()
                return Unary(tok.span.merge(self.end_span()), tok.lexeme, operand)
            if tok.lexeme in ("++", "--") and tok.kind == "punctuator":
                self.advance()
                operand = self.parse_unary()
                if not isinstance(operand, (Identifier, Member, Index)):
                    raise ParseError(f"invalid {tok.lexeme} target", tok.span)
                return Unary(tok.span.merge(self.end_span()), tok.lexeme, operand,
                             prefix=True)
            if tok.lexeme == "typeof" and tok.kind == "keyword":
                self.advance()
                operand = self.parse_unary()
                return Unary(tok.span.merge(self.end_span()), "typeof", operand)
            if tok.lexeme == "delete" and tok.kind == "keyword":
                self.advance()
                operand = self.parse_unary()
                return Delete(tok.span.merge(self.end_span()), operand)
        return self.parse_postfix()

    def parse_postfix(self) -> Node:
        expr = self.parse_left_hand_side()
        tok = self.peek()
        if (tok is not None and tok.kind == "punctuator" and tok.lexeme in ("++", "--")
                and tok.span.line == self.previous().span.end_line):
            if not isinstance(expr, (Identifier, Member, Index)):
                raise ParseError(f"invalid {tok.lexeme} target", tok.span)
            self.advance()
            return Unary(expr.span.merge(self.end_span()), tok.lexeme, expr,
                         prefix=False)
        return expr

    def parse_left_hand_side(self) -> Node:
        if self.check("new"):
            expr = self.parse_new()
        else:
            expr = self.parse_primary()
        return self.parse_suffixes(expr, allow_call=True)

    def parse_new(self) -> New:
        start = self.expect("new").span
        if self.check("new"):
            callee = self.parse_new()
        else:
            callee = self.parse_primary()
        callee = self.parse_suffixes(callee, allow_call=False)
        args = self.parse_arguments() if self.check("(") else []
        return New(start.merge(self.end_span()), callee, args)

    def parse_suffixes(self, expr: Node, allow_call: bool) -> Node:
        while True:
            if self.match("."):
                tok = self.peek()
                if tok is None or tok.kind != "identifier":
                    self.error("expected property name after '.'")
                self.advance()
                expr = Member(expr.span.merge(tok.span), expr, tok.lexeme, tok.span)
            elif self.check("["):
                self.advance()
                key = self.parse_expression()
                end = self.expect("]").span
                expr = Index(expr.span.merge(end), expr, key)
            elif allow_call and self.check("("):
                args = self.parse_arguments()
                expr = Call(expr.span.merge(self.end_span()), expr, args)
            else:
                return expr

    def parse_arguments(self) -> list:
        self.expect("(")
        args = []
        if not self.check(")"):
            while True:
                args.append(self.parse_assignment())
                if not self.match(","):
                    break
        self.expect(")")
        return args

    def parse_primary(self) -> Node:
        tok = self.peek()
        if tok is None:
            self.error("expected expression")

        if tok.kind == "number-literal":
            self.advance()
            return Literal(tok.span, float(tok.lexeme))
        if tok.kind == "string-literal":
            self.advance()
            return Literal(tok.span, decode_string_literal(tok.lexeme))
        if tok.kind == "keyword":
            undefined, null = _singletons()
            if tok.lexeme == "true":
                self.advance()
                return Literal(tok.span, True)
            if tok.lexeme == "false":
                self.advance()
                return Literal(tok.span, False)
            if tok.lexeme == "null":
                self.advance()
                return Literal(tok.span, null)
            if tok.lexeme == "undefined":
                self.advance()
                return Literal(tok.span, undefined)
            if tok.lexeme == "this":
                self.advance()
                return This(tok.span)
            if tok.lexeme == "function":
                return self.parse_function_expression()
            self.error("unexpected keyword")
        if tok.kind == "identifier":
            self.advance()
            return Identifier(tok.span, tok.lexeme)
        if self.check("("):
            self.advance()
            expr = self.parse_expression()
            self.expect(")")
            return expr
        if self.check("{"):
            return self.parse_object_literal()
        if self.check("["):
            return self.parse_array_literal()
        self.error("expected expression")

    def parse_function_expression(self) -> FunctionExpr:
        start = self.expect("function").span
        name = None
        tok = self.peek()
        if tok is not None and tok.kind == "identifier":
            self.advance()
            name = tok.lexeme
        params = self.parse_params()
        body = self.parse_function_body()
        return FunctionExpr(start.merge(self.end_span()), name, params, body)

    def parse_object_literal(self) -> ObjectLiteral:
        start = self.expect("{").span
        entries = []
        while not self.check("}"):
            tok = self.peek()
            if tok is None:
                self.error("expected '}'")
            if tok.kind == "identifier":
                key = tok.lexeme
            elif tok.kind == "string-literal":
                key = decode_string_literal(tok.lexeme)
            elif tok.kind == "number-literal":
                key = canonical_number_key(float(tok.lexeme))
            else:
                self.error("expected property key")
            self.advance()
            self.expect(":")
            value = self.parse_assignment()
            entries.append((key, value))
            if not self.match(","):
                break
        end = self.expect("}").span
        return ObjectLiteral(start.merge(end), entries)

    def parse_array_literal(self) -> ArrayLiteral:
        start = self.expect("[").span
        elements = []
        while not self.check("]"):
            elements.append(self.parse_assignment())
            if not self.match(","):
                break
        end = self.expect("]").span
        return ArrayLiteral(start.merge(end), elements)


def canonical_number_key(value: float) -> str:
    """Decimal property-key spelling of a numeric literal key (1.0 -> "1")."""
    from .object_model import number_to_string
    return number_to_string(value)


def parse_program(source: str) -> Program:
    """Parse `source` into a Program node."""
    return _Parser(tokenize(source)).parse_program()


# ---------------------------------------------------------------------------
# Expectation comments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Expectation:
    """A `// answers X` or `// raises an error` comment."""

    span: SourceSpan
    kind: str  # "answers" | "raises"
    expected: str | None = None


def extract_expectations(source: str) -> list[Expectation]:
    """Collect expectation comments; all other comments are ignored."""
    out = []
    for tok in tokenize(source):
        if tok.kind != "comment" or not tok.lexeme.startswith("//"):
            continue
        text = tok.lexeme[2:].strip()
        if text == "raises an error":
            out.append(Expectation(tok.span, "raises"))
        elif text.startswith("answers ") or text.startswith("answers\t"):
            out.append(Expectation(tok.span, "answers", text[len("answers"):].strip()))
    return out


def expectation_statement(program: Program, expectation: Expectation):
    """The ExpressionStatement an expectation is attached to.

    Prefers a statement ending on the comment's line, else the nearest
    preceding one.  Returns None when the program has no candidate.
    """
    same_line = None
    preceding = None
    for node in walk(program):
        if not isinstance(node, ExpressionStatement) or node.synthetic:
            continue
        end = (node.span.end_line, node.span.end_column)
        if node.span.end_line == expectation.span.line:
            if same_line is None or end > (same_line.span.end_line,
                                           same_line.span.end_column):
                same_line = node
        elif node.span.end_line < expectation.span.line:
            if preceding is None or end > (preceding.span.end_line,
                                           preceding.span.end_column):
                preceding = node
    return same_line if same_line is not None else preceding

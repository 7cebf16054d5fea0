import pytest

from jssec import syntax
from jssec.errors import LexError, ParseError
from jssec.syntax import (
    Assign,
    Binary,
    Block,
    Call,
    Delete,
    ExpressionStatement,
    FunctionDecl,
    Index,
    Literal,
    Member,
    New,
    ObjectLiteral,
    Return,
    SourceSpan,
    VarDecl,
    expectation_statement,
    extract_expectations,
    parse_program,
    tokenize,
    walk,
)

from helpers import corpus_files


# ---------------------------------------------------------------------------
# tokenize
# ---------------------------------------------------------------------------

def kinds_and_lexemes(source):
    return [(t.kind, t.lexeme) for t in tokenize(source)]


def test_tokenize_var_statement():
    assert kinds_and_lexemes("var a = 2;") == [
        ("keyword", "var"),
        ("identifier", "a"),
        ("punctuator", "="),
        ("number-literal", "2"),
        ("punctuator", ";"),
    ]


def test_tokenize_index_access_keeps_quote_style():
    tokens = tokenize("person['age']")
    assert [t.kind for t in tokens] == [
        "identifier", "punctuator", "string-literal", "punctuator"]
    assert tokens[2].lexeme == "'age'"
    assert tokenize('person["age"]')[2].lexeme == '"age"'


def test_tokenize_unterminated_string():
    with pytest.raises(LexError):
        tokenize('"unterminated')


def test_tokenize_illegal_character():
    with pytest.raises(LexError):
        tokenize("var a = @;")


def test_tokenize_keeps_comments_discards_whitespace():
    tokens = tokenize("a  // trailing\n/* block */ b")
    assert [t.kind for t in tokens] == [
        "identifier", "comment", "comment", "identifier"]


def test_token_spans_are_one_based_and_ordered():
    tokens = tokenize("var a;\n  a = 1;")
    assert tokens[0].span == SourceSpan(1, 1, 1, 4)
    assert tokens[3].span.line == 2 and tokens[3].span.column == 3
    previous = None
    for tok in tokens:
        span = tok.span
        assert (span.line, span.column) <= (span.end_line, span.end_column)
        if previous is not None:
            assert (previous.end_line, previous.end_column) <= (span.line,
                                                                span.column)
        previous = span


def test_tokenize_numbers():
    assert [t.lexeme for t in tokenize("1 2.5 .5 1e3 1.5e-2")] == [
        "1", "2.5", ".5", "1e3", "1.5e-2"]
    with pytest.raises(LexError):
        tokenize("1e")


# ---------------------------------------------------------------------------
# parse_program
# ---------------------------------------------------------------------------

def only_statement(source):
    program = parse_program(source)
    assert len(program.body) == 1
    return program.body[0]


def test_object_literal_keys_in_source_order():
    stmt = only_statement("x = {a : 10, b: 5};")
    literal = stmt.expression.value
    assert isinstance(literal, ObjectLiteral)
    assert [k for k, _ in literal.entries] == ["a", "b"]


def test_delete_of_index_on_object_literal():
    stmt = only_statement("delete {a: 0, b: 5}['b'];")
    assert isinstance(stmt, ExpressionStatement)
    assert isinstance(stmt.expression, Delete)
    assert isinstance(stmt.expression.operand, Index)
    assert isinstance(stmt.expression.operand.obj, ObjectLiteral)


def test_parse_error_on_truncated_function():
    with pytest.raises(ParseError):
        parse_program("var f = function(){ return")


def test_member_and_index_are_distinct_kinds():
    member = only_statement("a.b;").expression
    index = only_statement("a['b'];").expression
    assert isinstance(member, Member) and member.prop == "b"
    assert isinstance(index, Index)
    assert isinstance(index.key, Literal) and index.key.value == "b"


def test_statement_position_brace_is_object_literal_when_it_reads_like_one():
    program = parse_program("{} == {}\n{a: 1}\n{ a = 1; }")
    assert isinstance(program.body[0].expression, Binary)
    assert isinstance(program.body[1].expression, ObjectLiteral)
    assert isinstance(program.body[2], Block)


def test_newline_terminates_statement_when_next_token_cannot_continue():
    program = parse_program("person\nperson.age\nwindow.surname")
    assert len(program.body) == 3


def test_expression_continues_across_newline_on_operator():
    program = parse_program("a ==\nb;")
    assert len(program.body) == 1
    assert isinstance(program.body[0].expression, Binary)


def test_missing_separator_on_same_line_is_an_error():
    with pytest.raises(ParseError):
        parse_program("a b")


def test_return_is_newline_restricted():
    program = parse_program("function f() { return\n1; }")
    fn = program.body[0]
    assert isinstance(fn.body.body[0], Return)
    assert fn.body.body[0].value is None
    assert isinstance(fn.body.body[1], ExpressionStatement)


def test_return_outside_function_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_program("return 1;")


def test_undefined_is_a_literal_not_an_identifier():
    stmt = only_statement("undefined;")
    assert isinstance(stmt.expression, Literal)
    with pytest.raises(ParseError):
        parse_program("var undefined = 1;")


def test_prefix_and_postfix_increment():
    post = only_statement("a++;").expression
    pre = only_statement("--a;").expression
    assert post.op == "++" and post.prefix is False
    assert pre.op == "--" and pre.prefix is True


def test_new_without_parens_and_chained_member_call():
    bare = only_statement("new Animal;").expression
    assert isinstance(bare, New) and bare.args == []
    chained = only_statement("new Dog().say('hi');").expression
    assert isinstance(chained, Call)
    assert isinstance(chained.callee, Member)
    assert isinstance(chained.callee.obj, New)


def test_trailing_commas_in_literals():
    obj = only_statement("x = {foo: {value: 'h'},};").expression.value
    assert [k for k, _ in obj.entries] == ["foo"]
    arr = only_statement("x = [1, 2,];").expression.value
    assert len(arr.elements) == 2


def test_parenthesized_callee_stays_a_member_expression():
    call = only_statement("(o.f)();").expression
    assert isinstance(call.callee, Member)


def test_function_declaration_records_params_and_body():
    fn = only_statement("function sum(a, b){ return a + b; }")
    assert isinstance(fn, FunctionDecl)
    assert fn.params == ["a", "b"]
    assert isinstance(fn.body, Block)


def test_var_with_multiple_declarators():
    stmt = only_statement("var a = 1, b;")
    assert isinstance(stmt, VarDecl)
    assert [d.name for d in stmt.declarators] == ["a", "b"]
    assert stmt.declarators[1].init is None


def test_assignment_is_right_associative():
    stmt = only_statement("a = b = 1;")
    assert isinstance(stmt.expression, Assign)
    assert isinstance(stmt.expression.value, Assign)


def test_operator_precedence():
    expr = only_statement("1 + 2 * 3 == 7 && true;").expression
    assert expr.op == "&&"
    assert expr.left.op == "=="
    assert expr.left.left.op == "+"
    assert expr.left.left.right.op == "*"


def test_invalid_assignment_target():
    with pytest.raises(ParseError):
        parse_program("1 = 2;")


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------

def structure(node):
    if isinstance(node, syntax.Literal):
        return (node.kind, repr(node.value))
    label = node.kind
    if isinstance(node, syntax.Identifier):
        label += ":" + node.name
    if isinstance(node, syntax.Member):
        label += ":" + node.prop
    if isinstance(node, syntax.Binary):
        label += ":" + node.op
    return (label, [structure(c) for c in syntax.child_nodes(node)])


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.name)
def test_corpus_parses_deterministically(path):
    source = path.read_text(encoding="utf-8")
    first = parse_program(source)
    second = parse_program(source)
    assert structure(first) == structure(second)


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.name)
def test_corpus_span_soundness(path):
    source = path.read_text(encoding="utf-8")
    lines = source.splitlines()
    program = parse_program(source)
    for node in walk(program):
        span = node.span
        assert 1 <= span.line <= len(lines)
        assert span.end_line <= len(lines)
        assert (span.line, span.column) <= (span.end_line, span.end_column)
        for child in syntax.child_nodes(node):
            cspan = child.span
            assert (span.line, span.column) <= (cspan.line, cspan.column)
            assert (cspan.end_line, cspan.end_column) <= (span.end_line,
                                                          span.end_column)


# ---------------------------------------------------------------------------
# extract_expectations
# ---------------------------------------------------------------------------

def test_answers_expectation():
    exps = extract_expectations('get("a") + get("b"); // answers 15')
    assert len(exps) == 1
    assert exps[0].kind == "answers" and exps[0].expected == "15"


def test_raises_expectation():
    exps = extract_expectations("person.age // raises an error")
    assert len(exps) == 1
    assert exps[0].kind == "raises" and exps[0].expected is None


def test_free_comments_are_ignored():
    assert extract_expectations("// a free comment\na;\n/* answers 3 */") == []


def test_expectation_attaches_to_statement_ending_on_its_line():
    source = "a;\nb; // answers 1\nc;"
    program = parse_program(source)
    exp = extract_expectations(source)[0]
    stmt = expectation_statement(program, exp)
    assert stmt.expression.name == "b"


def test_expectation_attaches_to_nearest_preceding_statement():
    source = "a;\nb;\n\n// answers 1\nc;"
    program = parse_program(source)
    exp = extract_expectations(source)[0]
    stmt = expectation_statement(program, exp)
    assert stmt.expression.name == "b"

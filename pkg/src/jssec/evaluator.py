"""AST execution: scope chains, hoisting, `this` resolution, coercion, eval.

The interpreter is one-per-realm and single-threaded.  Runtime failures raise
JSRuntimeError subclasses which unwind to `run_program` and become error
completions (the language subset has no try/catch).  While running, the
interpreter records every non-synthetic expression statement's value (the
trace) and emits RuntimeEvents for global creation, window-bound `this`, and
eval use.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import (
    CoercionError,
    JSRuntimeError,
    LexError,
    NotCallableError,
    ParseError,
    PropertyAccessError,
    UndeclaredNameError,
    WithOperandError,
)
from .object_model import (
    NULL,
    UNDEFINED,
    FunctionPayload,
    JSObject,
    create_object,
    get_property,
    delete_property,
    number_to_string,
    set_property,
    tag_of,
)
from . import syntax
from .syntax import parse_program


# ---------------------------------------------------------------------------
# Coercions
# ---------------------------------------------------------------------------

def to_boolean(value) -> bool:
    """False exactly for undefined, null, false, +0, -0, NaN and ""."""
    tag = tag_of(value)
    if tag in ("undefined", "null"):
        return False
    if tag == "boolean":
        return value
    if tag == "number":
        return not (value == 0 or math.isnan(value))
    if tag == "string":
        return value != ""
    return True


def to_primitive(value, hint=None, invoke=None):
    """Primitives pass through; objects try valueOf/toString (hint-ordered)."""
    if not isinstance(value, JSObject):
        return value
    if invoke is None:
        raise CoercionError("cannot convert object to a primitive here")
    order = ("toString", "valueOf") if hint == "string" else ("valueOf", "toString")
    for name in order:
        method = get_property(value, name, invoke)
        if isinstance(method, JSObject) and method.callable is not None:
            result = invoke(method, value, [])
            if not isinstance(result, JSObject):
                return result
    raise CoercionError("cannot convert object to a primitive value")


_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
_HEX_RE = re.compile(r"^0[xX][0-9a-fA-F]+$")


def _string_to_number(text: str) -> float:
    text = text.strip(" \t\r\n\f\v")
    if text == "":
        return 0.0
    if text in ("Infinity", "+Infinity"):
        return math.inf
    if text == "-Infinity":
        return -math.inf
    if _HEX_RE.match(text):
        return float(int(text, 16))
    if _DECIMAL_RE.match(text):
        return float(text)
    return math.nan


def to_number(value, invoke=None) -> float:
    tag = tag_of(value)
    if tag == "number":
        return value
    if tag == "undefined":
        return math.nan
    if tag == "null":
        return 0.0
    if tag == "boolean":
        return 1.0 if value else 0.0
    if tag == "string":
        return _string_to_number(value)
    return to_number(to_primitive(value, "number", invoke))


def to_string(value, invoke=None) -> str:
    tag = tag_of(value)
    if tag == "string":
        return value
    if tag == "undefined":
        return "undefined"
    if tag == "null":
        return "null"
    if tag == "boolean":
        return "true" if value else "false"
    if tag == "number":
        return number_to_string(value)
    return to_string(to_primitive(value, "string", invoke))


def strict_equals(a, b) -> bool:
    """Same tag and value; NaN equals nothing, +0 equals -0, objects by identity."""
    ta = tag_of(a)
    if ta != tag_of(b):
        return False
    if ta in ("undefined", "null"):
        return True
    if ta == "object":
        return a is b
    return a == b


def abstract_equals(a, b, invoke=None) -> bool:
    """The coercing == comparison."""
    ta, tb = tag_of(a), tag_of(b)
    if ta == tb:
        return strict_equals(a, b)
    if {ta, tb} == {"undefined", "null"}:
        return True
    if ta == "number" and tb == "string":
        return a == to_number(b)
    if ta == "string" and tb == "number":
        return to_number(a) == b
    if ta == "boolean":
        return abstract_equals(to_number(a), b, invoke)
    if tb == "boolean":
        return abstract_equals(a, to_number(b), invoke)
    if ta in ("number", "string") and tb == "object":
        return abstract_equals(a, to_primitive(b, None, invoke), invoke)
    if tb in ("number", "string") and ta == "object":
        return abstract_equals(to_primitive(a, None, invoke), b, invoke)
    return False


def add_operator(a, b, invoke=None):
    """String concatenation when either primitive side is a string, else addition."""
    pa = to_primitive(a, None, invoke)
    pb = to_primitive(b, None, invoke)
    if tag_of(pa) == "string" or tag_of(pb) == "string":
        return to_string(pa, invoke) + to_string(pb, invoke)
    return to_number(pa, invoke) + to_number(pb, invoke)


def _abstract_less(a, b, invoke=None):
    """a < b per the coercing relational rules; None encodes 'undefined'."""
    pa = to_primitive(a, "number", invoke)
    pb = to_primitive(b, "number", invoke)
    if tag_of(pa) == "string" and tag_of(pb) == "string":
        return pa < pb
    na, nb = to_number(pa), to_number(pb)
    if math.isnan(na) or math.isnan(nb):
        return None
    return na < nb


def typeof_string(value) -> str:
    tag = tag_of(value)
    if tag == "null":
        return "object"
    if tag == "object":
        return "function" if value.callable is not None else "object"
    return tag


# ---------------------------------------------------------------------------
# Environments, completions, events
# ---------------------------------------------------------------------------

class Environment:
    """One scope frame: a declarative name map, or an object (with/global)."""

    __slots__ = ("record", "outer", "this_binding", "var_env", "is_object_frame")

    def __init__(self, record, outer, this_binding, var_env=None,
                 is_object_frame=False):
        self.record = record
        self.outer = outer
        self.this_binding = this_binding
        self.var_env = var_env if var_env is not None else self
        self.is_object_frame = is_object_frame

    def lookup(self, name: str):
        """Nearest frame defining `name`, or None."""
        env = self
        while env is not None:
            if env.is_object_frame:
                if env.record.has_property(name):
                    return env
            elif name in env.record:
                return env
            env = env.outer
        return None

    def declare(self, name: str, value, overwrite: bool):
        """Bind a hoisted name in this frame (no events, no descriptor checks)."""
        if self.is_object_frame:
            if overwrite or self.record.get_own(name) is None:
                self.record.put(name, value, writable=True, enumerable=True,
                                configurable=False)
        else:
            if overwrite or name not in self.record:
                self.record[name] = value


def enter_with(obj, env: Environment) -> Environment:
    """Push an object frame for a `with` statement."""
    if not isinstance(obj, JSObject):
        raise WithOperandError(
            f"with requires an object, got {tag_of(obj)}")
    return Environment(obj, env, env.this_binding, var_env=env.var_env,
                       is_object_frame=True)


@dataclass
class Completion:
    kind: str  # normal | return | error
    value: object = UNDEFINED
    error_message: str | None = None
    error_span: object = None


@dataclass(frozen=True)
class RuntimeEvent:
    kind: str  # global-created | this-bound-to-window | eval-invoked
    name: str | None
    span: object


@dataclass
class CallShape:
    """How an invocation site is written, which decides `this`.

    `base` is the receiver for member calls and the fresh object for
    construction; `explicit_this` is call/apply's first argument.
    """

    shape: str  # member-call | plain-call | explicit-call | construct
    base: object = None
    explicit_this: object = None


def resolve_this(site: CallShape, realm):
    if site.shape == "member-call":
        return site.base
    if site.shape == "plain-call":
        return realm.window
    if site.shape == "explicit-call":
        return site.explicit_this
    if site.shape == "construct":
        return site.base
    raise ValueError(f"unknown call shape {site.shape!r}")


# ---------------------------------------------------------------------------
# Hoisting
# ---------------------------------------------------------------------------

def hoist_declarations(body):
    """All `var` names and function declarations of one function/program body.

    Descends through blocks, branches and loops but not into nested function
    bodies.  Answers (var_names, function_decls) in source order, names
    deduplicated.
    """
    stmts = body.body if isinstance(body, (syntax.Program, syntax.Block)) else body
    var_names: list[str] = []
    seen = set()
    funcs: list[syntax.FunctionDecl] = []

    def visit(stmt):
        if isinstance(stmt, syntax.VarDecl):
            for decl in stmt.declarators:
                if decl.name not in seen:
                    seen.add(decl.name)
                    var_names.append(decl.name)
        elif isinstance(stmt, syntax.FunctionDecl):
            funcs.append(stmt)
        elif isinstance(stmt, (syntax.Program, syntax.Block)):
            for inner in stmt.body:
                visit(inner)
        elif isinstance(stmt, syntax.If):
            visit(stmt.then_branch)
            if stmt.else_branch is not None:
                visit(stmt.else_branch)
        elif isinstance(stmt, syntax.For):
            if isinstance(stmt.init, syntax.VarDecl):
                visit(stmt.init)
            visit(stmt.body)
        elif isinstance(stmt, syntax.While):
            visit(stmt.body)
        elif isinstance(stmt, syntax.With):
            visit(stmt.body)

    for stmt in stmts:
        visit(stmt)
    return var_names, funcs


class _ReturnSignal(Exception):
    def __init__(self, value):
        self.value = value


# ---------------------------------------------------------------------------
# Interpreter
# ---------------------------------------------------------------------------

class Interpreter:
    """Tree-walking evaluator bound to one realm."""

    def __init__(self, realm, hooks=None, on_trace=None):
        self.realm = realm
        self.hooks = hooks
        self.on_trace = on_trace  # called as (stmt, value) when a value is traced
        self.events: list[RuntimeEvent] = []
        self.trace: list = []  # (ExpressionStatement, value) in execution order
        self.current_statement = None  # top-level statement being executed
        self.function_depth = 0
        self.global_env = Environment(realm.window, None, realm.window,
                                      is_object_frame=True)
        self._caller_env = self.global_env
        self._tracing = True

    # -- driver --------------------------------------------------------------

    def run_program(self, program: syntax.Program) -> Completion:
        last = UNDEFINED
        try:
            self._apply_hoisting(self.global_env, program)
            for stmt in program.body:
                self.current_statement = stmt
                self.execute(stmt, self.global_env)
            if self.trace:
                last = self.trace[-1][1]
            return Completion("normal", last)
        except JSRuntimeError as exc:
            return Completion("error", UNDEFINED, exc.message, exc.span)

    def trace_values(self):
        return [value for _, value in self.trace]

    def _emit(self, kind, name, span):
        event = RuntimeEvent(kind, name, span)
        self.events.append(event)
        if self.hooks is not None:
            self.hooks(event)

    def _invoker(self, span):
        return lambda fn, this, args: self.invoke_function(fn, this, args, span)

    # -- hoisting ------------------------------------------------------------

    def _apply_hoisting(self, bind_env: Environment, body, closure_env=None):
        closure_env = closure_env if closure_env is not None else bind_env
        var_names, funcs = hoist_declarations(body)
        for decl in funcs:
            fn = self.create_function(decl, closure_env)
            bind_env.declare(decl.name, fn, overwrite=True)
        for name in var_names:
            bind_env.declare(name, UNDEFINED, overwrite=False)

    def create_function(self, node, env: Environment) -> JSObject:
        payload = FunctionPayload(params=list(node.params), body=node.body,
                                  closure_env=env, name=getattr(node, "name", None))
        return self.realm.new_function(payload)

    # -- statements ----------------------------------------------------------

    def execute(self, stmt, env: Environment):
        try:
            self._execute(stmt, env)
        except JSRuntimeError as exc:
            if exc.span is None:
                exc.span = stmt.span
            raise

    def _execute(self, stmt, env: Environment):
        if isinstance(stmt, syntax.ExpressionStatement):
            value = self.evaluate(stmt.expression, env)
            if self._tracing and not stmt.synthetic:
                self.trace.append((stmt, value))
                if self.on_trace is not None:
                    self.on_trace(stmt, value)
        elif isinstance(stmt, syntax.VarDecl):
            for decl in stmt.declarators:
                if decl.init is not None:
                    value = self.evaluate(decl.init, env)
                    self._set_name(env, decl.name, value, decl.name_span)
        elif isinstance(stmt, syntax.FunctionDecl):
            pass  # bound during hoisting
        elif isinstance(stmt, syntax.Block):
            for inner in stmt.body:
                self.execute(inner, env)
        elif isinstance(stmt, syntax.If):
            if to_boolean(self.evaluate(stmt.test, env)):
                self.execute(stmt.then_branch, env)
            elif stmt.else_branch is not None:
                self.execute(stmt.else_branch, env)
        elif isinstance(stmt, syntax.While):
            while to_boolean(self.evaluate(stmt.test, env)):
                self.execute(stmt.body, env)
        elif isinstance(stmt, syntax.For):
            if isinstance(stmt.init, syntax.VarDecl):
                self._execute(stmt.init, env)
            elif stmt.init is not None:
                self.evaluate(stmt.init, env)
            while stmt.test is None or to_boolean(self.evaluate(stmt.test, env)):
                self.execute(stmt.body, env)
                if stmt.update is not None:
                    self.evaluate(stmt.update, env)
        elif isinstance(stmt, syntax.With):
            obj = self.evaluate(stmt.obj, env)
            inner_env = enter_with(obj, env)
            self.execute(stmt.body, inner_env)
        elif isinstance(stmt, syntax.Return):
            value = UNDEFINED if stmt.value is None else self.evaluate(stmt.value, env)
            raise _ReturnSignal(value)
        else:
            raise JSRuntimeError(f"cannot execute node {stmt.kind}", stmt.span)

    # -- expressions ---------------------------------------------------------

    def evaluate(self, node, env: Environment):
        try:
            return self._evaluate(node, env)
        except JSRuntimeError as exc:
            if exc.span is None:
                exc.span = node.span
            raise

    def _evaluate(self, node, env: Environment):
        if isinstance(node, syntax.Literal):
            return node.value
        if isinstance(node, syntax.Identifier):
            return self._get_name(env, node.name, node.span)
        if isinstance(node, syntax.This):
            value = env.this_binding
            if self.function_depth > 0 and value is self.realm.window:
                self._emit("this-bound-to-window", None, node.span)
            return value
        if isinstance(node, syntax.ObjectLiteral):
            obj = self.realm.new_object()
            for key, value_expr in node.entries:
                obj.put(key, self.evaluate(value_expr, env))
            return obj
        if isinstance(node, syntax.ArrayLiteral):
            return self.realm.new_array(
                [self.evaluate(el, env) for el in node.elements])
        if isinstance(node, syntax.FunctionExpr):
            return self.create_function(node, env)
        if isinstance(node, syntax.Member):
            base = self.evaluate(node.obj, env)
            return self.get_member(base, node.prop, node.span)
        if isinstance(node, syntax.Index):
            base = self.evaluate(node.obj, env)
            key = to_string(self.evaluate(node.key, env), self._invoker(node.span))
            return self.get_member(base, key, node.span)
        if isinstance(node, syntax.Assign):
            return self._assign(node, env)
        if isinstance(node, syntax.Binary):
            return self._binary(node, env)
        if isinstance(node, syntax.Unary):
            return self._unary(node, env)
        if isinstance(node, syntax.Delete):
            return self._delete(node, env)
        if isinstance(node, syntax.Call):
            return self._call(node, env)
        if isinstance(node, syntax.New):
            fn = self.evaluate(node.callee, env)
            args = [self.evaluate(a, env) for a in node.args]
            self._caller_env = env
            return self.construct(fn, args, node.span)
        raise JSRuntimeError(f"cannot evaluate node {node.kind}", node.span)

    # -- names and properties -------------------------------------------------

    def _get_name(self, env: Environment, name: str, span):
        frame = env.lookup(name)
        if frame is None:
            raise UndeclaredNameError(f"'{name}' is not defined", span)
        if frame.is_object_frame:
            return get_property(frame.record, name, self._invoker(span))
        return frame.record[name]

    def _set_name(self, env: Environment, name: str, value, span):
        frame = env.lookup(name)
        if frame is None:
            # implicit global: undeclared assignment lands on window
            self.set_member(self.realm.window, name, value, span)
        elif frame.is_object_frame:
            self.set_member(frame.record, name, value, span)
        else:
            frame.record[name] = value

    def get_member(self, base, key: str, span):
        if base is UNDEFINED or base is NULL:
            raise PropertyAccessError(
                f"cannot read property {key!r} of {tag_of(base)}", span)
        if not isinstance(base, JSObject):
            raise PropertyAccessError(
                f"property access on a {tag_of(base)} value is not supported",
                span)
        return get_property(base, key, self._invoker(span))

    def set_member(self, base, key: str, value, span) -> bool:
        if base is UNDEFINED or base is NULL:
            raise PropertyAccessError(
                f"cannot set property {key!r} of {tag_of(base)}", span)
        if not isinstance(base, JSObject):
            raise PropertyAccessError(
                f"property access on a {tag_of(base)} value is not supported",
                span)
        own_before = base.get_own(key) is not None
        performed = set_property(base, key, value, self._invoker(span))
        if (performed and not own_before and base is self.realm.window
                and base.get_own(key) is not None):
            self._emit("global-created", key, span)
        return performed

    def _assign(self, node: syntax.Assign, env: Environment):
        value = self.evaluate(node.value, env)
        target = node.target
        if isinstance(target, syntax.Identifier):
            self._set_name(env, target.name, value, node.span)
        elif isinstance(target, syntax.Member):
            base = self.evaluate(target.obj, env)
            self.set_member(base, target.prop, value, node.span)
        elif isinstance(target, syntax.Index):
            base = self.evaluate(target.obj, env)
            key = to_string(self.evaluate(target.key, env), self._invoker(node.span))
            self.set_member(base, key, value, node.span)
        else:
            raise JSRuntimeError("invalid assignment target", node.span)
        return value

    # -- operators -------------------------------------------------------------

    def _binary(self, node: syntax.Binary, env: Environment):
        op = node.op
        if op == "&&":
            left = self.evaluate(node.left, env)
            if not to_boolean(left):
                return left
            return self.evaluate(node.right, env)
        if op == "||":
            left = self.evaluate(node.left, env)
            if to_boolean(left):
                return left
            return self.evaluate(node.right, env)

        left = self.evaluate(node.left, env)
        right = self.evaluate(node.right, env)
        invoke = self._invoker(node.span)
        if op == "+":
            return add_operator(left, right, invoke)
        if op == "-":
            return to_number(left, invoke) - to_number(right, invoke)
        if op == "*":
            return to_number(left, invoke) * to_number(right, invoke)
        if op == "/":
            return self._divide(to_number(left, invoke), to_number(right, invoke))
        if op == "%":
            try:
                return math.fmod(to_number(left, invoke), to_number(right, invoke))
            except ValueError:
                return math.nan
        if op == "==":
            return abstract_equals(left, right, invoke)
        if op == "!=":
            return not abstract_equals(left, right, invoke)
        if op == "===":
            return strict_equals(left, right)
        if op == "!==":
            return not strict_equals(left, right)
        if op == "<":
            result = _abstract_less(left, right, invoke)
            return False if result is None else result
        if op == ">":
            result = _abstract_less(right, left, invoke)
            return False if result is None else result
        if op == "<=":
            result = _abstract_less(right, left, invoke)
            return False if result is None else not result
        if op == ">=":
            result = _abstract_less(left, right, invoke)
            return False if result is None else not result
        raise JSRuntimeError(f"unknown operator {op!r}", node.span)

    @staticmethod
    def _divide(a: float, b: float) -> float:
        if b == 0:
            if a == 0 or math.isnan(a):
                return math.nan
            return math.inf * math.copysign(1.0, a) * math.copysign(1.0, b)
        return a / b

    def _unary(self, node: syntax.Unary, env: Environment):
        op = node.op
        if op == "typeof":
            if isinstance(node.operand, syntax.Identifier):
                frame = env.lookup(node.operand.name)
                if frame is None:
                    return "undefined"
            return typeof_string(self.evaluate(node.operand, env))
        if op == "!":
            return not to_boolean(self.evaluate(node.operand, env))
        if op == "-":
            return -to_number(self.evaluate(node.operand, env),
                              self._invoker(node.span))
        if op in ("++", "--"):
            old = to_number(self._read_ref(node.operand, env),
                            self._invoker(node.span))
            new = old + 1 if op == "++" else old - 1
            self._write_ref(node.operand, new, env)
            return new if node.prefix else old
        raise JSRuntimeError(f"unknown unary operator {op!r}", node.span)

    def _read_ref(self, target, env: Environment):
        return self.evaluate(target, env)

    def _write_ref(self, target, value, env: Environment):
        if isinstance(target, syntax.Identifier):
            self._set_name(env, target.name, value, target.span)
        elif isinstance(target, syntax.Member):
            base = self.evaluate(target.obj, env)
            self.set_member(base, target.prop, value, target.span)
        elif isinstance(target, syntax.Index):
            base = self.evaluate(target.obj, env)
            key = to_string(self.evaluate(target.key, env),
                            self._invoker(target.span))
            self.set_member(base, key, value, target.span)
        else:
            raise JSRuntimeError("invalid update target", target.span)

    def _delete(self, node: syntax.Delete, env: Environment):
        operand = node.operand
        if isinstance(operand, syntax.Member):
            base = self.evaluate(operand.obj, env)
            return self._delete_from(base, operand.prop, node.span)
        if isinstance(operand, syntax.Index):
            base = self.evaluate(operand.obj, env)
            key = to_string(self.evaluate(operand.key, env),
                            self._invoker(node.span))
            return self._delete_from(base, key, node.span)
        # non-reference operand: evaluate for effect, answer true
        self.evaluate(operand, env)
        return True

    def _delete_from(self, base, key, span) -> bool:
        if base is UNDEFINED or base is NULL:
            raise PropertyAccessError(
                f"cannot delete property {key!r} of {tag_of(base)}", span)
        if not isinstance(base, JSObject):
            return True
        return delete_property(base, key)

    # -- calls -----------------------------------------------------------------

    def _call(self, node: syntax.Call, env: Environment):
        callee = node.callee
        if isinstance(callee, syntax.Member):
            base = self.evaluate(callee.obj, env)
            fn = self.get_member(base, callee.prop, callee.span)
            site = CallShape("member-call", base=base)
        elif isinstance(callee, syntax.Index):
            base = self.evaluate(callee.obj, env)
            key = to_string(self.evaluate(callee.key, env),
                            self._invoker(callee.span))
            fn = self.get_member(base, key, callee.span)
            site = CallShape("member-call", base=base)
        else:
            fn = self.evaluate(callee, env)
            site = CallShape("plain-call")
        args = [self.evaluate(a, env) for a in node.args]
        self._caller_env = env  # direct eval evaluates in its caller's scope
        return self.invoke_function(fn, resolve_this(site, self.realm), args,
                                    node.span)

    def invoke_function(self, fn, this_value, args, span):
        """Call `fn` with parameters bound by value; missing args are undefined."""
        if not (isinstance(fn, JSObject) and fn.callable is not None):
            raise NotCallableError(f"{typeof_string(fn)} is not a function", span)
        payload = fn.callable
        if payload.builtin is not None:
            return payload.builtin(self, this_value, args, span)
        env = Environment({}, payload.closure_env, this_value)
        for i, name in enumerate(payload.params):
            env.record[name] = args[i] if i < len(args) else UNDEFINED
        self._apply_hoisting(env, payload.body)
        self.function_depth += 1
        try:
            for stmt in payload.body.body:
                self.execute(stmt, env)
        except _ReturnSignal as signal:
            return signal.value
        finally:
            self.function_depth -= 1
        return UNDEFINED

    def call_without_new(self, fn, args, span=None):
        """Plain-call shape: `this` is the window object."""
        site = CallShape("plain-call")
        return self.invoke_function(fn, resolve_this(site, self.realm), args, span)

    def construct(self, fn, args, span):
        """`new fn(...)`: fresh object wired to fn.prototype; object returns win."""
        if not (isinstance(fn, JSObject) and fn.callable is not None):
            raise NotCallableError("constructor is not a function", span)
        proto = get_property(fn, "prototype", self._invoker(span))
        if not isinstance(proto, JSObject):
            proto = self.realm.object_prototype
        fresh = create_object(proto)
        site = CallShape("construct", base=fresh)
        result = self.invoke_function(fn, resolve_this(site, self.realm), args, span)
        return result if isinstance(result, JSObject) else fresh

    # -- eval ------------------------------------------------------------------

    def direct_eval(self, text: str, env: Environment, span=None):
        """Evaluate source in the caller's environment.

        Answers the value of the last expression statement.  Evaluated
        statements do not join the trace (they belong to no source file).
        """
        try:
            program = parse_program(text)
        except (LexError, ParseError) as exc:
            raise JSRuntimeError(f"eval: {exc.message}", span)
        self._apply_hoisting(env.var_env, program, closure_env=env)
        last = UNDEFINED
        was_tracing = self._tracing
        self._tracing = False
        try:
            for stmt in program.body:
                if isinstance(stmt, syntax.ExpressionStatement):
                    last = self.evaluate(stmt.expression, env)
                else:
                    self.execute(stmt, env)
        finally:
            self._tracing = was_tracing
        return last


def eval_program(ast: syntax.Program, realm, hooks=None):
    """Run a program in `realm`; answers (completion, runtime events)."""
    interp = Interpreter(realm, hooks)
    completion = interp.run_program(ast)
    return completion, interp.events

"""Static scope analysis and security rules, plus the runtime leak monitor.

The static rules (W001-W009) run over the AST and a scope model built with
the same hoisting rule the evaluator uses.  The dynamic monitor turns the
evaluator's RuntimeEvent stream into R001-R003 diagnostics.  Rules only ever
emit warnings; exit codes are the CLI's business.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownRuleError
from . import syntax
from .evaluator import hoist_declarations

RULES = {
    "W001": ("implicit-global",
             "assignment to an undeclared name creates a property on the "
             "window object (§3.1)"),
    "W002": ("with-statement",
             "the with statement mixes an object's properties into the scope "
             "chain and makes name resolution unpredictable (§3.6)"),
    "W003": ("constructor-without-new",
             "a capitalized function is a constructor by convention; calling "
             "it without new binds this to the window object (§2.8, §3.4)"),
    "W004": ("this-in-plain-function",
             "this inside a function invoked as a plain call is bound to the "
             "window object (§3.3)"),
    "W005": ("loose-equality",
             "== and != coerce their operands before comparing; prefer === "
             "and !== (§3.8)"),
    "W006": ("eval",
             "eval executes dynamically assembled code and makes static "
             "analysis impossible (§2.5)"),
    "W007": ("var-self-initialization",
             "var x = x reads the hoisted local variable, never the outer "
             "binding of the same name (§3.7)"),
    "W008": ("proto-access",
             "__proto__ is non-portable and exposes the prototype chain "
             "(§2.9)"),
    "W009": ("constructor-returns-object",
             "a constructor returning an object discards the instance being "
             "constructed (§3.4)"),
    "R001": ("runtime-global-leak",
             "a window property was created while the program ran (§3.1, "
             "§3.3)"),
    "R002": ("runtime-window-this",
             "this was bound to the window object during a call (§3.3)"),
    "R003": ("runtime-eval",
             "eval ran (§2.5)"),
}

STATIC_RULES = frozenset(rule for rule in RULES if rule.startswith("W"))


@dataclass(frozen=True)
class Diagnostic:
    rule: str
    severity: str
    span: syntax.SourceSpan
    message: str
    file: str = "<source>"

    def sort_key(self):
        return (self.file, self.span.line, self.span.column, self.rule)


def explain_rule(rule_id: str) -> str:
    if rule_id not in RULES:
        raise UnknownRuleError(f"unknown rule id {rule_id!r}")
    name, description = RULES[rule_id]
    return f"{rule_id} {name}: {description}"


# ---------------------------------------------------------------------------
# Scope model
# ---------------------------------------------------------------------------

@dataclass
class Scope:
    """Declared names and uses of one function body (or the program)."""

    node: object
    parent: object
    params: list = field(default_factory=list)
    var_names: list = field(default_factory=list)
    func_names: list = field(default_factory=list)
    assignments: list = field(default_factory=list)  # (name, Assign node)
    references: list = field(default_factory=list)   # (name, Identifier node)
    this_nodes: list = field(default_factory=list)
    children: list = field(default_factory=list)

    @property
    def declared(self):
        return set(self.params) | set(self.var_names) | set(self.func_names)

    def classify(self, name: str) -> str:
        """local, outer, or free."""
        if name in self.declared:
            return "local"
        scope = self.parent
        while scope is not None:
            if name in scope.declared:
                return "outer"
            scope = scope.parent
        return "free"


class ScopeModel:
    def __init__(self, root: Scope):
        self.root = root
        self.scopes: dict[int, Scope] = {id(root.node): root}
        # file-wide call/binding facts for the this/constructor heuristics
        self.name_bound_functions: dict[str, list] = {}
        self.prop_bound_functions: dict[str, list] = {}
        self.aliases: dict[str, set] = {}  # name -> property names it was read from
        self.plain_called_names: set[str] = set()

    def scope_of(self, node) -> Scope:
        return self.scopes[id(node)]

    def all_scopes(self):
        stack = [self.root]
        while stack:
            scope = stack.pop()
            yield scope
            stack.extend(scope.children)


def build_scope_model(ast: syntax.Program) -> ScopeModel:
    """Scope tables mirroring the evaluator's hoisting rule."""
    root = Scope(ast, None)
    var_names, funcs = hoist_declarations(ast)
    root.var_names = var_names
    root.func_names = [f.name for f in funcs]
    model = ScopeModel(root)

    def enter_function(node, parent_scope):
        scope = Scope(node, parent_scope, params=list(node.params))
        v, f = hoist_declarations(node.body)
        scope.var_names = v
        scope.func_names = [fn.name for fn in f]
        parent_scope.children.append(scope)
        model.scopes[id(node)] = scope
        if isinstance(node, syntax.FunctionDecl):
            _bind(model.name_bound_functions, node.name, node)
        if isinstance(node, syntax.FunctionExpr) and node.name:
            _bind(model.name_bound_functions, node.name, node)
        for stmt in node.body.body:
            visit(stmt, scope)
        return scope

    def note_binding(target_name, value, via_property=None):
        if isinstance(value, (syntax.FunctionExpr, syntax.FunctionDecl)):
            if via_property is not None:
                _bind(model.prop_bound_functions, via_property, value)
            elif target_name is not None:
                _bind(model.name_bound_functions, target_name, value)
        elif isinstance(value, syntax.Member) and target_name is not None:
            model.aliases.setdefault(target_name, set()).add(value.prop)

    def visit(node, scope):
        if isinstance(node, (syntax.FunctionDecl, syntax.FunctionExpr)):
            enter_function(node, scope)
            return
        if isinstance(node, syntax.This):
            scope.this_nodes.append(node)
            return
        if isinstance(node, syntax.Identifier):
            scope.references.append((node.name, node))
            return
        if isinstance(node, syntax.Assign):
            if isinstance(node.target, syntax.Identifier):
                scope.assignments.append((node.target.name, node))
                note_binding(node.target.name, node.value)
            else:
                if isinstance(node.target, syntax.Member):
                    note_binding(None, node.value, via_property=node.target.prop)
                visit(node.target, scope)
            visit(node.value, scope)
            return
        if isinstance(node, syntax.VarDecl):
            for decl in node.declarators:
                if decl.init is not None:
                    note_binding(decl.name, decl.init)
                    visit(decl.init, scope)
            return
        if isinstance(node, syntax.ObjectLiteral):
            for key, value in node.entries:
                note_binding(None, value, via_property=key)
                visit(value, scope)
            return
        if isinstance(node, syntax.Call):
            if isinstance(node.callee, syntax.Identifier):
                model.plain_called_names.add(node.callee.name)
            for child in syntax.child_nodes(node):
                visit(child, scope)
            return
        for child in syntax.child_nodes(node):
            visit(child, scope)

    for stmt in ast.body:
        visit(stmt, root)
    return model


def _bind(table, key, value):
    table.setdefault(key, []).append(value)


# ---------------------------------------------------------------------------
# Static rules
# ---------------------------------------------------------------------------

def lint_program(ast: syntax.Program, scope: ScopeModel | None = None,
                 config=None, file: str = "<source>") -> list[Diagnostic]:
    """Apply every enabled static rule; pure in (ast, config)."""
    if scope is None:
        scope = build_scope_model(ast)
    enabled = STATIC_RULES if config is None else frozenset(config)
    out: list[Diagnostic] = []

    def report(rule, span, message):
        if rule in enabled:
            out.append(Diagnostic(rule, "warning", span, message, file))

    _check_assignments(scope, report)        # W001
    _check_node_rules(ast, scope, report)    # W002 W003 W005 W006 W008
    _check_this_rules(ast, scope, report)    # W004
    _check_var_self_init(ast, scope, report)  # W007
    _check_constructor_returns(scope, report)  # W009
    return sorted(out, key=Diagnostic.sort_key)


def _check_assignments(model: ScopeModel, report):
    for scope in model.all_scopes():
        for name, node in scope.assignments:
            if scope.classify(name) == "free":
                report("W001", node.span,
                       f"assignment to undeclared name '{name}' creates a "
                       f"window property")


def _is_constructor_name(name: str) -> bool:
    return bool(name) and name[0].isupper()


def _check_node_rules(ast, model: ScopeModel, report):
    for node in syntax.walk(ast):
        if isinstance(node, syntax.With):
            report("W002", node.span, "with statement mixes scopes")
        elif isinstance(node, syntax.Binary) and node.op in ("==", "!="):
            report("W005", node.span,
                   f"loose equality '{node.op}' coerces its operands")
        elif isinstance(node, syntax.Call) and isinstance(node.callee,
                                                          syntax.Identifier):
            name = node.callee.name
            if name == "eval":
                report("W006", node.span, "call to eval")
            elif (_is_constructor_name(name)
                  and name in model.name_bound_functions):
                report("W003", node.span,
                       f"constructor '{name}' called without new")
        elif isinstance(node, syntax.Member) and node.prop == "__proto__":
            report("W008", node.prop_span or node.span,
                   "access to __proto__")
        elif (isinstance(node, syntax.Index)
              and isinstance(node.key, syntax.Literal)
              and node.key.value == "__proto__"):
            report("W008", node.span, "access to __proto__")


def _check_this_rules(ast, model: ScopeModel, report):
    # `this` at top level is already the window object
    for node in model.root.this_nodes:
        report("W004", node.span, "'this' at top level is the window object")

    flagged = []
    for name in model.plain_called_names:
        flagged.extend(model.name_bound_functions.get(name, ()))
        for prop in model.aliases.get(name, ()):
            flagged.extend(model.prop_bound_functions.get(prop, ()))
    seen = set()
    for fn in flagged:
        if id(fn) in seen:
            continue
        seen.add(id(fn))
        for this_node in model.scope_of(fn).this_nodes:
            report("W004", this_node.span,
                   "'this' is bound to the window object when this function "
                   "is invoked as a plain call")


def _check_var_self_init(ast, model: ScopeModel, report):
    for scope in model.all_scopes():
        for node in _own_nodes(scope):
            if not isinstance(node, syntax.VarDecl):
                continue
            for decl in node.declarators:
                if (isinstance(decl.init, syntax.Identifier)
                        and decl.init.name == decl.name
                        and _outer_declares(scope, decl.name)):
                    report("W007", decl.name_span.merge(decl.init.span),
                           f"'var {decl.name} = {decl.name}' reads the "
                           f"hoisted local, not the outer '{decl.name}'")


def _outer_declares(scope: Scope, name: str) -> bool:
    outer = scope.parent
    while outer is not None:
        if name in outer.declared:
            return True
        outer = outer.parent
    return False


def _check_constructor_returns(model: ScopeModel, report):
    capitalized = set()
    for name, fns in model.name_bound_functions.items():
        if _is_constructor_name(name):
            capitalized.update(id(fn) for fn in fns)
    for scope in model.all_scopes():
        if id(scope.node) not in capitalized:
            continue
        for node in _own_nodes(scope):
            if (isinstance(node, syntax.Return) and node.value is not None
                    and isinstance(node.value,
                                   (syntax.ObjectLiteral, syntax.New))):
                report("W009", node.span,
                       "constructor returns an object; the constructed "
                       "instance is discarded")


def _own_nodes(scope: Scope):
    """Nodes of the scope's own code, not descending into nested functions."""
    if isinstance(scope.node, syntax.Program):
        roots = scope.node.body
    else:
        roots = scope.node.body.body
    stack = list(roots)
    while stack:
        node = stack.pop()
        yield node
        for child in syntax.child_nodes(node):
            if not isinstance(child, (syntax.FunctionDecl, syntax.FunctionExpr)):
                stack.append(child)


# ---------------------------------------------------------------------------
# Runtime leak monitor
# ---------------------------------------------------------------------------

_EVENT_RULES = {
    "global-created": "R001",
    "this-bound-to-window": "R002",
    "eval-invoked": "R003",
}


def monitor_global_leaks(events, file: str = "<run>") -> list[Diagnostic]:
    """Turn the evaluator's event stream into diagnostics.

    Repeated identical events (same kind, name and span — e.g. from a loop)
    collapse into one diagnostic.
    """
    out = []
    seen = set()
    for event in events:
        rule = _EVENT_RULES.get(event.kind)
        if rule is None:
            continue
        key = (rule, event.name, event.span)
        if key in seen:
            continue
        seen.add(key)
        if rule == "R001":
            message = f"window property '{event.name}' created at runtime"
        elif rule == "R002":
            message = "'this' was bound to the window object"
        else:
            message = "eval was invoked"
        out.append(Diagnostic(rule, "warning", event.span, message, file))
    return sorted(out, key=Diagnostic.sort_key)

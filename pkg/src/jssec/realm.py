"""Global realm construction: the window object, intrinsics and builtins.

Each realm is an isolated object store rooted at its own window object.  A
top-level `var x` and `window.x` are the same storage because the global
scope frame IS the window object.  Builtins are native (not self-hosted):
Object.create/defineProperty/preventExtensions/isExtensible/freeze/isFrozen,
Object.prototype.{toString,valueOf,isPrototypeOf}, Function.prototype.
{call,apply}, Array with push/join/toString, and eval.
"""

from __future__ import annotations

import math

from .errors import ApplyArgsError, DefineError, JSRuntimeError, NotCallableError
from .object_model import (
    NULL,
    UNDEFINED,
    FunctionPayload,
    JSObject,
    PropertyDescriptor,
    create_object,
    define_property,
    freeze,
    get_property,
    is_extensible,
    is_frozen,
    is_prototype_of,
    number_to_string,
    prevent_extensions,
    set_property,
    tag_of,
)


class Realm:
    """One window object plus its intrinsic prototypes and constructors."""

    def __init__(self):
        self.object_prototype = JSObject(proto=NULL, class_name="Object")
        self.function_prototype = JSObject(
            proto=self.object_prototype, class_name="Function",
            callable=FunctionPayload(params=[], builtin=_noop,
                                     builtin_id="Function.prototype"))
        self.array_prototype = JSObject(proto=self.object_prototype,
                                        class_name="Array")
        self.array_prototype.put("length", 0.0, writable=True, enumerable=False,
                                 configurable=False)
        self.window = JSObject(proto=self.object_prototype, class_name="Window")

        self._install_object_prototype()
        self._install_function_prototype()
        self._install_array_prototype()
        self.object_constructor = self._install_object_namespace()
        self.array_constructor = self._install_array_constructor()
        self.function_constructor = self._install_function_constructor()

        win = self.window
        win.put("window", win, writable=False, enumerable=False,
                configurable=False)
        win.put("Object", self.object_constructor, writable=True,
                enumerable=False, configurable=True)
        win.put("Array", self.array_constructor, writable=True,
                enumerable=False, configurable=True)
        win.put("Function", self.function_constructor, writable=True,
                enumerable=False, configurable=True)
        win.put("eval", self.native_function(_eval, "eval"), writable=True,
                enumerable=False, configurable=True)

    # -- factories -----------------------------------------------------------

    def native_function(self, fn, name: str) -> JSObject:
        payload = FunctionPayload(params=[], builtin=fn, builtin_id=name,
                                  name=name)
        return JSObject(proto=self.function_prototype, class_name="Function",
                        callable=payload)

    def new_function(self, payload: FunctionPayload) -> JSObject:
        """A user function object; its `prototype` property holds a fresh
        object whose `constructor` points back at the function."""
        fn = JSObject(proto=self.function_prototype, class_name="Function",
                      callable=payload)
        proto = JSObject(proto=self.object_prototype)
        proto.put("constructor", fn, writable=True, enumerable=False,
                  configurable=True)
        fn.put("prototype", proto, writable=True, enumerable=False,
               configurable=False)
        return fn

    def new_object(self) -> JSObject:
        return create_object(self.object_prototype)

    def new_array(self, elements) -> JSObject:
        arr = JSObject(proto=self.array_prototype, class_name="Array")
        arr.put("length", float(len(elements)), writable=True,
                enumerable=False, configurable=False)
        for i, element in enumerate(elements):
            arr.put(str(i), element)
        return arr

    def _method(self, target: JSObject, name: str, fn):
        target.put(name, self.native_function(fn, name), writable=True,
                   enumerable=False, configurable=True)

    # -- intrinsic wiring ------------------------------------------------------

    def _install_object_prototype(self):
        self._method(self.object_prototype, "toString", _object_to_string)
        self._method(self.object_prototype, "valueOf", _object_value_of)
        self._method(self.object_prototype, "isPrototypeOf", _is_prototype_of)

    def _install_function_prototype(self):
        self._method(self.function_prototype, "call", _function_call)
        self._method(self.function_prototype, "apply", _function_apply)

    def _install_array_prototype(self):
        self._method(self.array_prototype, "push", _array_push)
        self._method(self.array_prototype, "join", _array_join)
        self._method(self.array_prototype, "toString", _array_to_string)

    def _install_object_namespace(self) -> JSObject:
        ctor = self.native_function(_object_constructor, "Object")
        ctor.put("prototype", self.object_prototype, writable=False,
                 enumerable=False, configurable=False)
        self.object_prototype.put("constructor", ctor, writable=True,
                                  enumerable=False, configurable=True)
        self._method(ctor, "create", _object_create)
        self._method(ctor, "defineProperty", _object_define_property)
        self._method(ctor, "preventExtensions", _object_prevent_extensions)
        self._method(ctor, "isExtensible", _object_is_extensible)
        self._method(ctor, "freeze", _object_freeze)
        self._method(ctor, "isFrozen", _object_is_frozen)
        return ctor

    def _install_array_constructor(self) -> JSObject:
        ctor = self.native_function(_array_constructor, "Array")
        ctor.put("prototype", self.array_prototype, writable=False,
                 enumerable=False, configurable=False)
        self.array_prototype.put("constructor", ctor, writable=True,
                                 enumerable=False, configurable=True)
        return ctor

    def _install_function_constructor(self) -> JSObject:
        ctor = self.native_function(_function_constructor, "Function")
        ctor.put("prototype", self.function_prototype, writable=False,
                 enumerable=False, configurable=False)
        self.function_prototype.put("constructor", ctor, writable=True,
                                    enumerable=False, configurable=True)
        return ctor


def create_realm() -> Realm:
    """A fresh realm; distinct realms share no objects."""
    return Realm()


# ---------------------------------------------------------------------------
# Builtin implementations — signature (interp, this, args, span) -> value
# ---------------------------------------------------------------------------

def _arg(args, index):
    return args[index] if index < len(args) else UNDEFINED


def _noop(interp, this, args, span):
    return UNDEFINED


def _require_object(value, what, span):
    if not isinstance(value, JSObject):
        raise JSRuntimeError(f"{what} requires an object, got {tag_of(value)}",
                             span)
    return value


def _object_to_string(interp, this, args, span):
    if isinstance(this, JSObject):
        return f"[object {this.class_name}]"
    return f"[object {tag_of(this).capitalize()}]"


def _object_value_of(interp, this, args, span):
    return this


def _is_prototype_of(interp, this, args, span):
    if not isinstance(this, JSObject):
        return False
    return is_prototype_of(this, _arg(args, 0))


def _function_call(interp, this, args, span):
    """fn.call(thisArg, arg1, ...) — explicit-call shape."""
    from .evaluator import CallShape, resolve_this
    if not (isinstance(this, JSObject) and this.callable is not None):
        raise NotCallableError("call() receiver is not a function", span)
    site = CallShape("explicit-call", explicit_this=_arg(args, 0))
    return interp.invoke_function(this, resolve_this(site, interp.realm),
                                  list(args[1:]), span)


def _function_apply(interp, this, args, span):
    """fn.apply(thisArg, argsArray) — explicit-call shape."""
    from .evaluator import CallShape, resolve_this, to_number
    if not (isinstance(this, JSObject) and this.callable is not None):
        raise NotCallableError("apply() receiver is not a function", span)
    packed = _arg(args, 1)
    if packed is UNDEFINED or packed is NULL:
        call_args = []
    elif isinstance(packed, JSObject) and packed.class_name == "Array":
        invoke = lambda fn, t, a: interp.invoke_function(fn, t, a, span)
        length = int(to_number(get_property(packed, "length", invoke), invoke))
        call_args = [get_property(packed, str(i), invoke)
                     for i in range(length)]
    else:
        raise ApplyArgsError(
            f"apply() arguments must be an array, got {tag_of(packed)}", span)
    site = CallShape("explicit-call", explicit_this=_arg(args, 0))
    return interp.invoke_function(this, resolve_this(site, interp.realm),
                                  call_args, span)


def _eval(interp, this, args, span):
    """Direct eval: runs in the caller's scope."""
    interp._emit("eval-invoked", None, span)
    text = _arg(args, 0)
    if tag_of(text) != "string":
        return text
    return interp.direct_eval(text, interp._caller_env, span)


def _object_constructor(interp, this, args, span):
    value = _arg(args, 0)
    if isinstance(value, JSObject):
        return value
    return create_object(interp.realm.object_prototype)


def _descriptor_from_object(interp, spec, span) -> PropertyDescriptor:
    from .evaluator import to_boolean
    if not isinstance(spec, JSObject):
        raise DefineError(f"property descriptor must be an object, got "
                          f"{tag_of(spec)}", span)
    invoke = lambda fn, t, a: interp.invoke_function(fn, t, a, span)

    def read(key):
        return get_property(spec, key, invoke)

    has_data = spec.has_property("value") or spec.has_property("writable")
    has_accessor = spec.has_property("get") or spec.has_property("set")
    if has_data and has_accessor:
        raise DefineError("property descriptor cannot be both data and "
                          "accessor", span)
    enumerable = to_boolean(read("enumerable"))
    configurable = to_boolean(read("configurable"))
    if has_accessor:
        getter, setter = read("get"), read("set")
        for role, fn in (("getter", getter), ("setter", setter)):
            if fn is not UNDEFINED and not (isinstance(fn, JSObject)
                                            and fn.callable is not None):
                raise DefineError(f"{role} must be a function", span)
        return PropertyDescriptor.accessor(getter, setter,
                                           enumerable=enumerable,
                                           configurable=configurable)
    return PropertyDescriptor.data(read("value"),
                                   writable=to_boolean(read("writable")),
                                   enumerable=enumerable,
                                   configurable=configurable)


def _object_create(interp, this, args, span):
    proto = _arg(args, 0)
    if not (proto is NULL or isinstance(proto, JSObject)):
        raise JSRuntimeError("Object.create prototype must be an object or "
                             "null", span)
    obj = create_object(proto)
    props = _arg(args, 1)
    if props is not UNDEFINED:
        _require_object(props, "Object.create properties argument", span)
        invoke = lambda fn, t, a: interp.invoke_function(fn, t, a, span)
        keys = [k for k, d in props.properties.items() if d.enumerable]
        for key in keys:
            spec = get_property(props, key, invoke)
            define_property(obj, key,
                            _descriptor_from_object(interp, spec, span))
    return obj


def _object_define_property(interp, this, args, span):
    from .evaluator import to_string
    obj = _require_object(_arg(args, 0), "Object.defineProperty", span)
    invoke = lambda fn, t, a: interp.invoke_function(fn, t, a, span)
    key = to_string(_arg(args, 1), invoke)
    define_property(obj, key, _descriptor_from_object(interp, _arg(args, 2), span))
    return obj


def _object_prevent_extensions(interp, this, args, span):
    return prevent_extensions(
        _require_object(_arg(args, 0), "Object.preventExtensions", span))


def _object_is_extensible(interp, this, args, span):
    return is_extensible(_require_object(_arg(args, 0), "Object.isExtensible",
                                         span))


def _object_freeze(interp, this, args, span):
    return freeze(_require_object(_arg(args, 0), "Object.freeze", span))


def _object_is_frozen(interp, this, args, span):
    return is_frozen(_require_object(_arg(args, 0), "Object.isFrozen", span))


def _array_constructor(interp, this, args, span):
    return interp.realm.new_array(list(args))


def _function_constructor(interp, this, args, span):
    raise JSRuntimeError("the Function constructor is not supported", span)


def _length_of(interp, obj, span) -> int:
    from .evaluator import to_number
    invoke = lambda fn, t, a: interp.invoke_function(fn, t, a, span)
    length = to_number(get_property(obj, "length", invoke), invoke)
    if math.isnan(length) or length < 0:
        return 0
    return int(length)


def _array_push(interp, this, args, span):
    arr = _require_object(this, "push", span)
    invoke = lambda fn, t, a: interp.invoke_function(fn, t, a, span)
    count = float(_length_of(interp, arr, span))
    for value in args:
        set_property(arr, number_to_string(count), value, invoke)
        count += 1
    if arr.class_name != "Array":
        set_property(arr, "length", count, invoke)
    return count


def _array_join(interp, this, args, span):
    from .evaluator import to_string
    arr = _require_object(this, "join", span)
    invoke = lambda fn, t, a: interp.invoke_function(fn, t, a, span)
    separator = _arg(args, 0)
    sep = "," if separator is UNDEFINED else to_string(separator, invoke)
    count = _length_of(interp, arr, span)
    parts = []
    for i in range(count):
        value = get_property(arr, str(i), invoke)
        parts.append("" if value is UNDEFINED or value is NULL
                     else to_string(value, invoke))
    return sep.join(parts)


def _array_to_string(interp, this, args, span):
    return _array_join(interp, this, [], span)

"""Value universe and the mutable object store.

Values are: the undefined/null singletons, Python bool, Python float (IEEE-754
double, so NaN/±0/Infinity behave natively), Python str, and JSObject
references.  Property lookup walks the prototype chain; writes follow
non-strict semantics (blocked writes fail silently); ES5 descriptors govern
writability, enumerability, configurability and accessors.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import DefineError, JSRuntimeError


class JSUndefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "undefined"


class JSNull:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "null"


UNDEFINED = JSUndefined()
NULL = JSNull()


def tag_of(value) -> str:
    """The value's type tag; exactly one tag per value."""
    if value is UNDEFINED:
        return "undefined"
    if value is NULL:
        return "null"
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, float):
        return "number"
    if isinstance(value, str):
        return "string"
    if isinstance(value, JSObject):
        return "object"
    raise TypeError(f"not a language value: {value!r}")


def number_to_string(value: float) -> str:
    """Canonical decimal rendering; integer-valued doubles drop the fraction."""
    if math.isnan(value):
        return "NaN"
    if value == math.inf:
        return "Infinity"
    if value == -math.inf:
        return "-Infinity"
    if value == 0:
        return "0"
    if value == int(value) and abs(value) < 1e21:
        return str(int(value))
    out = repr(value)
    # single-digit exponents carry no leading zero (1e-07 -> 1e-7)
    return re.sub(r"e([+-])0(\d)$", r"e\g<1>\g<2>", out)


def canonicalize_key(key) -> str:
    """All property keys are strings; numeric indices use their decimal form."""
    if isinstance(key, str):
        return key
    if isinstance(key, float):
        return number_to_string(key)
    raise TypeError(f"bad property key: {key!r}")


@dataclass
class PropertyDescriptor:
    """Data (value/writable) or accessor (getter/setter) property metadata.

    Absent flags default to False, matching descriptor-object semantics.
    """

    kind: str  # "data" | "accessor"
    value: object = None
    writable: bool = False
    getter: object = None  # a function object or UNDEFINED
    setter: object = None
    enumerable: bool = False
    configurable: bool = False

    @staticmethod
    def data(value, writable=False, enumerable=False, configurable=False):
        return PropertyDescriptor("data", value=value, writable=writable,
                                  enumerable=enumerable, configurable=configurable)

    @staticmethod
    def accessor(getter=UNDEFINED, setter=UNDEFINED, enumerable=False,
                 configurable=False):
        return PropertyDescriptor("accessor", getter=getter, setter=setter,
                                  enumerable=enumerable, configurable=configurable)

    @property
    def is_data(self):
        return self.kind == "data"


@dataclass
class FunctionPayload:
    """What makes an object callable: user code plus closure, or a builtin."""

    params: list
    body: object = None  # Block node for user functions
    closure_env: object = None
    name: str | None = None
    builtin: object = None  # python callable (interp, this, args, span) -> value
    builtin_id: str | None = None


class JSObject:
    """Ordered property map + prototype link + extensibility flag."""

    __slots__ = ("properties", "proto", "extensible", "callable", "class_name")

    def __init__(self, proto=NULL, class_name="Object", callable=None):
        if not (proto is NULL or isinstance(proto, JSObject)):
            raise TypeError("proto must be an object or null")
        self.properties: dict[str, PropertyDescriptor] = {}
        self.proto = proto
        self.extensible = True
        self.callable: FunctionPayload | None = callable
        self.class_name = class_name

    def __repr__(self):
        return f"<JSObject {self.class_name} {list(self.properties)}>"

    def get_own(self, key: str) -> PropertyDescriptor | None:
        return self.properties.get(key)

    def put(self, key, value, writable=True, enumerable=True, configurable=True):
        """Install a data property directly, bypassing all checks (realm wiring)."""
        self.properties[canonicalize_key(key)] = PropertyDescriptor.data(
            value, writable=writable, enumerable=enumerable,
            configurable=configurable)

    def has_property(self, key: str) -> bool:
        key = canonicalize_key(key)
        if key == "__proto__":
            return True
        obj = self
        while isinstance(obj, JSObject):
            if key in obj.properties:
                return True
            obj = obj.proto
        return False


def find_property(obj: JSObject, key: str):
    """Nearest descriptor for `key` along the chain: (holder, descriptor) or None."""
    cur = obj
    while isinstance(cur, JSObject):
        desc = cur.properties.get(key)
        if desc is not None:
            return cur, desc
        cur = cur.proto
    return None


def _callable_value(value) -> bool:
    return isinstance(value, JSObject) and value.callable is not None


def get_property(obj: JSObject, key, invoke=None):
    """Chain lookup; missing keys answer undefined, accessors run their getter.

    `invoke(fn, this, args)` performs getter calls; the pseudo-key
    ``__proto__`` answers the prototype link.
    """
    key = canonicalize_key(key)
    if key == "__proto__":
        return obj.proto
    found = find_property(obj, key)
    if found is None:
        return UNDEFINED
    _, desc = found
    if desc.is_data:
        return desc.value
    if not _callable_value(desc.getter):
        return UNDEFINED
    if invoke is None:
        raise TypeError("accessor lookup requires an invoke callback")
    return invoke(desc.getter, obj, [])


def set_property(obj: JSObject, key, value, invoke=None) -> bool:
    """Non-strict write; answers whether the write was performed.

    An accessor with a setter (own or inherited) runs; an own writable data
    property is overwritten; otherwise a new own property is created when the
    object is extensible.  Blocked writes do nothing.  Writes never touch the
    prototype's own properties.
    """
    key = canonicalize_key(key)
    if key == "__proto__":
        return False  # the prototype link is read-only
    if obj.class_name == "Array" and key == "length":
        raise JSRuntimeError("assigning to array length is not supported")
    found = find_property(obj, key)
    if found is not None:
        holder, desc = found
        if not desc.is_data:
            if not _callable_value(desc.setter):
                return False
            if invoke is None:
                raise TypeError("accessor write requires an invoke callback")
            invoke(desc.setter, obj, [value])
            return True
        if holder is obj:
            if not desc.writable:
                return False
            desc.value = value
            return True
    if not obj.extensible:
        return False
    obj.properties[key] = PropertyDescriptor.data(
        value, writable=True, enumerable=True, configurable=True)
    if obj.class_name == "Array":
        _update_array_length(obj, key)
    return True


def delete_property(obj: JSObject, key) -> bool:
    """Remove an own property; absent keys answer true, non-configurable false."""
    key = canonicalize_key(key)
    desc = obj.properties.get(key)
    if desc is None:
        return True
    if not desc.configurable:
        return False
    del obj.properties[key]
    return True


def define_property(obj: JSObject, key, desc: PropertyDescriptor) -> JSObject:
    """Create or reconfigure an own property under descriptor rules.

    Reconfiguring a non-configurable property raises unless only the value
    changes on a writable data property; new keys require extensibility.
    """
    key = canonicalize_key(key)
    existing = obj.properties.get(key)
    if existing is None:
        if not obj.extensible:
            raise DefineError(f"cannot define {key!r}: object is not extensible")
        obj.properties[key] = desc
        if obj.class_name == "Array":
            _update_array_length(obj, key)
        return obj
    if not existing.configurable:
        value_only = (existing.is_data and desc.is_data and existing.writable
                      and desc.writable == existing.writable
                      and desc.enumerable == existing.enumerable
                      and desc.configurable == existing.configurable)
        if not value_only:
            raise DefineError(f"cannot redefine non-configurable property {key!r}")
        existing.value = desc.value
        return obj
    obj.properties[key] = desc
    return obj


def create_object(proto) -> JSObject:
    """Fresh empty extensible object with the given prototype (object or null)."""
    obj = JSObject(proto=proto)
    _check_acyclic(obj)
    return obj


def _check_acyclic(obj: JSObject):
    seen = set()
    cur = obj
    while isinstance(cur, JSObject):
        if id(cur) in seen:
            raise JSRuntimeError("prototype chains must be acyclic")
        seen.add(id(cur))
        cur = cur.proto


def prevent_extensions(obj: JSObject) -> JSObject:
    obj.extensible = False
    return obj


def is_extensible(obj: JSObject) -> bool:
    return obj.extensible


def freeze(obj: JSObject) -> JSObject:
    """Prevent extensions and make every own property unwritable/unconfigurable."""
    obj.extensible = False
    for desc in obj.properties.values():
        if desc.is_data:
            desc.writable = False
        desc.configurable = False
    return obj


def is_frozen(obj: JSObject) -> bool:
    if obj.extensible:
        return False
    for desc in obj.properties.values():
        if desc.configurable:
            return False
        if desc.is_data and desc.writable:
            return False
    return True


def is_prototype_of(candidate: JSObject, value) -> bool:
    """True iff `candidate` appears strictly in the prototype chain of `value`."""
    if not isinstance(value, JSObject):
        return False
    cur = value.proto
    while isinstance(cur, JSObject):
        if cur is candidate:
            return True
        cur = cur.proto
    return False


def enumerate_keys(obj: JSObject) -> list[str]:
    """Own-then-inherited enumerable keys, insertion-ordered per object.

    A key present on a nearer object shadows the rest of the chain even when
    the nearer property is non-enumerable.
    """
    seen = set()
    out = []
    cur = obj
    while isinstance(cur, JSObject):
        for key, desc in cur.properties.items():
            if key in seen:
                continue
            seen.add(key)
            if desc.enumerable:
                out.append(key)
        cur = cur.proto
    return out


_ARRAY_INDEX_RE = re.compile(r"^(0|[1-9][0-9]*)$")


def array_index(key: str):
    """The integer an array-index key denotes, or None."""
    if _ARRAY_INDEX_RE.match(key):
        idx = int(key)
        if idx < 2 ** 32 - 1:
            return idx
    return None


def _update_array_length(obj: JSObject, key: str):
    idx = array_index(key)
    if idx is None:
        return
    length = obj.properties.get("length")
    if length is not None and length.is_data and float(idx) >= length.value:
        length.value = float(idx + 1)

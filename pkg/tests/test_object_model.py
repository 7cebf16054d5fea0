import pytest
from hypothesis import given, settings, strategies as st

from jssec.errors import DefineError
from jssec.object_model import (
    NULL,
    UNDEFINED,
    FunctionPayload,
    JSObject,
    PropertyDescriptor,
    canonicalize_key,
    create_object,
    define_property,
    delete_property,
    enumerate_keys,
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


def data(value, **flags):
    return PropertyDescriptor.data(value, **flags)


def make(proto=NULL, **props):
    obj = create_object(proto)
    for key, value in props.items():
        obj.put(key, value)
    return obj


# ---------------------------------------------------------------------------
# tags and keys
# ---------------------------------------------------------------------------

def test_tags_are_exclusive():
    values = [UNDEFINED, NULL, True, 1.0, "1", make()]
    tags = [tag_of(v) for v in values]
    assert tags == ["undefined", "null", "boolean", "number", "string",
                    "object"]


def test_key_canonicalization_is_idempotent():
    for raw in (1.0, 0.5, "1", "x", -0.0, 1e21):
        once = canonicalize_key(raw)
        assert canonicalize_key(once) == once


def test_numeric_key_equals_string_key():
    obj = make()
    set_property(obj, 1.0, "via number")
    assert get_property(obj, "1") == "via number"
    set_property(obj, "2", "via string")
    assert get_property(obj, 2.0) == "via string"


def test_number_to_string_rendering():
    assert number_to_string(42.0) == "42"
    assert number_to_string(-0.0) == "0"
    assert number_to_string(float("nan")) == "NaN"
    assert number_to_string(float("inf")) == "Infinity"
    assert number_to_string(1.5) == "1.5"
    assert number_to_string(1e-7) == "1e-7"
    assert number_to_string(1e21) == "1e+21"


# ---------------------------------------------------------------------------
# get_property
# ---------------------------------------------------------------------------

def test_get_missing_property_is_undefined():
    obj = make(a=1.0, b=2.0)
    assert get_property(obj, "c") is UNDEFINED


def test_get_walks_the_prototype_chain():
    cat_prototype = make(numberOfLegs=4.0)
    garfield = make(proto=cat_prototype, color="red")
    assert get_property(garfield, "numberOfLegs") == 4.0
    assert get_property(garfield, "color") == "red"


def test_own_property_shadows_prototype():
    proto = make(x="from proto")
    child = make(proto=proto, x="own")
    assert get_property(child, "x") == "own"


def test_proto_pseudo_key_reads_the_link():
    proto = make()
    child = make(proto=proto)
    assert get_property(child, "__proto__") is proto
    assert get_property(proto, "__proto__") is NULL


def test_get_through_accessor_calls_getter_with_receiver():
    calls = []
    getter = JSObject(callable=FunctionPayload(params=[], builtin=object()))
    holder = make()
    holder.properties["x"] = PropertyDescriptor.accessor(getter=getter)
    child = make(proto=holder)

    def invoke(fn, this, args):
        calls.append((fn, this, args))
        return "from getter"

    assert get_property(child, "x", invoke) == "from getter"
    assert calls == [(getter, child, [])]


def test_accessor_without_getter_answers_undefined():
    obj = make()
    obj.properties["x"] = PropertyDescriptor.accessor()
    assert get_property(obj, "x") is UNDEFINED


# ---------------------------------------------------------------------------
# set_property
# ---------------------------------------------------------------------------

def test_set_updates_existing_property():
    obj = make(a=0.0)
    assert set_property(obj, "a", 10.0) is True
    assert get_property(obj, "a") == 10.0


def test_set_creates_missing_property_with_full_flags():
    obj = make(a=0.0)
    assert set_property(obj, "b", 10.0) is True
    desc = obj.get_own("b")
    assert desc.writable and desc.enumerable and desc.configurable
    assert list(obj.properties) == ["a", "b"]


def test_set_on_frozen_object_is_a_silent_no_op():
    dog = make()
    freeze(dog)
    assert set_property(dog, "age", 5.0) is False
    assert get_property(dog, "age") is UNDEFINED


def test_set_never_mutates_the_prototype():
    proto = make(color="red")
    child = make(proto=proto)
    set_property(child, "color", "grey")
    assert get_property(proto, "color") == "red"
    assert get_property(child, "color") == "grey"
    assert proto.get_own("color").value == "red"


def test_set_through_setter():
    written = []
    setter = JSObject(callable=FunctionPayload(params=[], builtin=object()))
    obj = make()
    obj.properties["x"] = PropertyDescriptor.accessor(setter=setter)

    def invoke(fn, this, args):
        written.append((this, args))
        return UNDEFINED

    assert set_property(obj, "x", 5.0, invoke) is True
    assert written == [(obj, [5.0])]
    assert not obj.get_own("x").is_data


def test_set_own_non_writable_fails_silently():
    obj = make()
    define_property(obj, "x", data("v", writable=False, configurable=True))
    assert set_property(obj, "x", "other") is False
    assert get_property(obj, "x") == "v"


def test_proto_key_is_not_writable():
    obj = make()
    assert set_property(obj, "__proto__", make()) is False
    assert obj.proto is NULL


# ---------------------------------------------------------------------------
# delete_property
# ---------------------------------------------------------------------------

def test_delete_existing_configurable_property():
    obj = make(a=0.0, b=5.0)
    assert delete_property(obj, "b") is True
    assert list(obj.properties) == ["a"]


def test_delete_absent_key_answers_true():
    assert delete_property(make(), "missing") is True


def test_delete_non_configurable_answers_false():
    dog = make()
    define_property(dog, "name", data("Pilou", enumerable=True))
    assert delete_property(dog, "name") is False
    assert get_property(dog, "name") == "Pilou"


# ---------------------------------------------------------------------------
# define_property
# ---------------------------------------------------------------------------

def test_define_non_writable_blocks_assignment():
    dog = make()
    define_property(dog, "name", data("Pilou", enumerable=True))
    set_property(dog, "name", "another name")
    assert get_property(dog, "name") == "Pilou"


def test_redefining_non_configurable_raises():
    dog = make()
    define_property(dog, "name", data("Pilou", enumerable=True))
    with pytest.raises(DefineError):
        define_property(dog, "name", data("X", enumerable=True))


def test_value_only_change_on_writable_non_configurable_is_allowed():
    obj = make()
    define_property(obj, "x", data(1.0, writable=True))
    define_property(obj, "x", data(2.0, writable=True))
    assert get_property(obj, "x") == 2.0


def test_define_on_non_extensible_object_raises():
    obj = make()
    prevent_extensions(obj)
    with pytest.raises(DefineError):
        define_property(obj, "x", data(1.0))


def test_define_keeps_insertion_position_on_redefinition():
    obj = make(a=1.0, b=2.0)
    define_property(obj, "a", data(9.0, writable=True, enumerable=True,
                                   configurable=True))
    assert list(obj.properties) == ["a", "b"]


# ---------------------------------------------------------------------------
# create / extensibility / freeze
# ---------------------------------------------------------------------------

def test_create_with_null_prototype_inherits_nothing():
    object_prototype = make(toString="a function stand-in")
    orphan = create_object(NULL)
    assert is_prototype_of(object_prototype, orphan) is False
    assert get_property(orphan, "toString") is UNDEFINED
    set_property(orphan, "a", 1.0)
    assert get_property(orphan, "a") == 1.0


def test_create_with_prototype_inherits():
    object_prototype = make(toString="a function stand-in")
    child = create_object(object_prototype)
    assert get_property(child, "toString") == "a function stand-in"


def test_prevent_extensions_blocks_growth_only():
    dog = make(name="Pilou")
    assert is_extensible(dog) is True
    prevent_extensions(dog)
    assert is_extensible(dog) is False
    assert set_property(dog, "age", 5.0) is False
    assert get_property(dog, "age") is UNDEFINED
    assert delete_property(dog, "name") is True  # deletion still allowed


def test_freeze_and_is_frozen():
    dog = make(name="Pilou")
    assert is_frozen(dog) is False
    freeze(dog)
    assert is_frozen(dog) is True
    set_property(dog, "age", 5.0)
    assert get_property(dog, "age") is UNDEFINED
    assert delete_property(dog, "name") is False


def test_freeze_of_empty_object_is_frozen():
    obj = make()
    freeze(obj)
    assert is_frozen(obj) is True


def test_non_extensible_but_writable_is_not_frozen():
    obj = make(a=1.0)
    prevent_extensions(obj)
    assert is_frozen(obj) is False


# ---------------------------------------------------------------------------
# is_prototype_of / enumerate_keys
# ---------------------------------------------------------------------------

def test_is_prototype_of_strict_chain_membership():
    proto = make()
    child = create_object(proto)
    assert is_prototype_of(proto, child) is True
    assert is_prototype_of(child, child) is False
    assert is_prototype_of(proto, "not an object") is False


def test_enumerate_keys_insertion_order():
    obj = make(a=1.0, b=2.0)
    assert enumerate_keys(obj) == ["a", "b"]


def test_enumerate_includes_enumerable_defined_property():
    dog = make()
    define_property(dog, "name", data("Pilou", enumerable=True))
    define_property(dog, "hidden", data(1.0))
    assert enumerate_keys(dog) == ["name"]


def test_enumerate_child_shadows_prototype_key():
    proto = make(x="px", y="py")
    child = make(proto=proto, x="cx")
    assert enumerate_keys(child) == ["x", "y"]
    assert get_property(child, "x") == "cx"


def test_enumerate_non_enumerable_shadow_hides_inherited_key():
    proto = make(x="px")
    child = create_object(proto)
    define_property(child, "x", data("cx"))  # non-enumerable shadow
    assert enumerate_keys(child) == []


# ---------------------------------------------------------------------------
# property-based: chain-walk oracle, freeze fixpoint, shadowing locality
# ---------------------------------------------------------------------------

KEYS = [f"k{i}" for i in range(16)]


def naive_chain_lookup(obj, key):
    """Independent reference walker: first own map holding the key wins."""
    while isinstance(obj, JSObject):
        if key in obj.properties:
            descriptor = obj.properties[key]
            assert descriptor.is_data
            return descriptor.value
        obj = obj.proto
    return UNDEFINED


@st.composite
def chains(draw):
    depth = draw(st.integers(min_value=1, max_value=8))
    objects = []
    proto = NULL
    for level in range(depth):
        obj = create_object(proto)
        for key in draw(st.lists(st.sampled_from(KEYS), unique=True,
                                 max_size=6)):
            obj.put(key, f"{key}@{level}")
        objects.append(obj)
        proto = obj
    return objects[-1]


@settings(max_examples=200)
@given(chains())
def test_chain_walk_matches_naive_reference(head):
    for key in KEYS:
        assert get_property(head, key) == naive_chain_lookup(head, key)


@settings(max_examples=100)
@given(chains(), st.sampled_from(KEYS), st.sampled_from(KEYS))
def test_freeze_fixpoint(head, key_a, key_b):
    freeze(head)
    assert is_frozen(head)
    before = {k: d.value for k, d in head.properties.items()}
    set_property(head, key_a, "overwrite attempt")
    set_property(head, "fresh-key", 1.0)
    delete_property(head, key_b)
    after = {k: d.value for k, d in head.properties.items()}
    assert before == after
    assert is_frozen(head)


@settings(max_examples=100)
@given(chains(), st.sampled_from(KEYS))
def test_shadowing_locality(head, key):
    proto = head.proto
    snapshot = None
    if isinstance(proto, JSObject):
        snapshot = {k: d.value for k, d in proto.properties.items()}
    set_property(head, key, "child write")
    assert get_property(head, key) == "child write"
    if isinstance(proto, JSObject):
        assert {k: d.value for k, d in proto.properties.items()} == snapshot


def test_proto_cycles_cannot_be_created():
    a = make()
    b = create_object(a)
    # the only public mutation path for the link is rejected
    assert set_property(a, "__proto__", b) is False
    assert a.proto is NULL
    seen = set()
    cur = b
    while isinstance(cur, JSObject):
        assert id(cur) not in seen
        seen.add(id(cur))
        cur = cur.proto

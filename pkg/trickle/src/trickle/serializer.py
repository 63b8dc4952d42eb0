from typing import Any

import orjson

_OPTIONS = orjson.OPT_SERIALIZE_NUMPY | orjson.OPT_SORT_KEYS


def _default(obj: Any) -> Any:  # noqa: ANN401
    if hasattr(obj, "model_dump"):
        return obj.model_dump(mode="json")
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError


def serialize(obj: object, *, indent: bool = False) -> str:
    """Serialize an object to a JSON string with sorted keys."""
    option = _OPTIONS | orjson.OPT_INDENT_2 if indent else _OPTIONS
    return orjson.dumps(obj, default=_default, option=option).decode("utf-8")


def deserialize(obj: str | bytes) -> object:
    """Deserialize a JSON string to an object."""
    return orjson.loads(obj)

import json
import keyword
from collections import abc


class FrozenJSON:
    """
    Read-only attribute view over a parsed JSON document.

    Missing keys raise the error class handed to `load`, so a malformed
    network document surfaces as an input error instead of a KeyError.

    >>> doc = FrozenJSON.load(b'{"source": "s", "links": [{"id": "e1"}]}')
    >>> doc.source, doc.links[0].id
    ('s', 'e1')
    """

    def __new__(cls, arg, error=KeyError):
        if isinstance(arg, abc.Mapping):
            return super().__new__(cls)
        elif isinstance(arg, abc.MutableSequence):
            return tuple(FrozenJSON(item, error) for item in arg)
        else:
            return arg

    def __init__(self, mapping, error=KeyError):
        self.__error = error
        self.__data = {}
        for key, value in mapping.items():
            if keyword.iskeyword(key):
                key += "_"
            self.__data[key] = value

    def __getattr__(self, name):
        if name.startswith("_FrozenJSON__"):
            raise AttributeError(name)
        if name in self.__data:
            return FrozenJSON(self.__data[name], self.__error)
        if hasattr(self.__data, name):
            return getattr(self.__data, name)
        raise self.__error(f"missing key: {name}")

    def __contains__(self, name):
        return name in self.__data

    def get(self, name, default=None):
        if name in self.__data:
            return FrozenJSON(self.__data[name], self.__error)
        return default

    @staticmethod
    def load(raw, error=KeyError):
        try:
            if isinstance(raw, bytes):
                raw = raw.decode("utf-8")
            data = json.loads(raw)
        except UnicodeDecodeError as e:
            raise error(f"invalid UTF-8: {e}") from e
        except json.JSONDecodeError as e:
            raise error(f"invalid JSON: {e}") from e
        if not isinstance(data, abc.Mapping):
            raise error("document root must be an object")
        return FrozenJSON(data, error)


def dump(document):
    return json.dumps(document, indent=2) + "\n"

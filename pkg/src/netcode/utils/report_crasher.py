from collections import abc

import numpy as np


class ReportCrasher:
    """Rebuilds a report mapping out of JSON primitives only.

    Sets become sorted lists, numpy scalars and field arrays become ints,
    dataclass-like values expose `to_document()`.
    """

    def __init__(self, obj):
        self.obj = obj

    @staticmethod
    def is_simple(obj):
        _primitive = (int, float, str, bool, type(None))
        return type(obj) in _primitive

    @staticmethod
    def is_set(obj):
        return isinstance(obj, (set, frozenset))

    @staticmethod
    def is_list(obj):
        return isinstance(obj, abc.Iterable) and not isinstance(obj, (str, bytes))

    @staticmethod
    def is_mapping(obj):
        return isinstance(obj, abc.Mapping)

    def __call__(self):
        def _rebuild(v):
            if ReportCrasher.is_simple(v):
                return v
            if isinstance(v, np.generic):
                return v.item()
            if isinstance(v, np.ndarray):
                return v.view(np.ndarray).astype(np.int64).tolist()
            if hasattr(v, "to_document"):
                return _rebuild(v.to_document())
            if ReportCrasher.is_mapping(v):
                return {str(k): _rebuild(i) for k, i in v.items()}
            if ReportCrasher.is_set(v):
                return sorted((_rebuild(i) for i in v), key=_set_key)
            if ReportCrasher.is_list(v):
                return [_rebuild(i) for i in v]
            return str(v)

        return _rebuild(self.obj)


def _set_key(item):
    if isinstance(item, list):
        return (len(item), [str(i) for i in item])
    return (0, [str(item)])

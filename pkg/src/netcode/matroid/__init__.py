from .core import (
    Matroid,
    dual,
    free_matroid,
    is_base_orderable,
    is_independent,
    matroids_equal,
    parallel_extension,
    rank,
    series_extension,
    uniform_matroid,
    vector_matroid,
)
from .gammoid import LinkageInstance, strict_gammoid
from .transversal import BipartiteSystem, transversal_matroid

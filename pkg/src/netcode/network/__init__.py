from .model import (
    Link,
    MulticastNetwork,
    PathSet,
    augment_super_source,
    parse_network,
    restrict,
    serialize_network,
)
from .flow import all_path_sets, check_nodes, edge_disjoint_paths, is_cut, maxflow

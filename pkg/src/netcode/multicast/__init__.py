from .receiver import ReceiverBipartite, build_bipartite_H, gammoid_direct_oracle, receiver_gammoid
from .matroid import (
    MulticastMatroid,
    build_multicast_matroid,
    is_multicast_matroid_base_orderable,
    verify_representation,
)

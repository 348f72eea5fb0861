from .linear_code import (
    GlobalKernelMatrix,
    LinearCode,
    LocalKernels,
    compute_global_kernels,
    induced_matroid,
    recover_local_kernels,
    subspace_dim,
    verify_multicast,
)
from .construct import BruteForceSearch, brute_force_solve, jaggi_sanders_construct
from .document import parse_code, serialize_code

"""Exact-arithmetic verification of the two-boundary braid and Hecke algebra
action on M (x) N (x) V^d for the general linear Lie superalgebra gl(n|m)."""

from .partitions import (
    Box,
    HookProfile,
    addable_hook_positions,
    box_sets,
    box_sum_identity,
    content,
    hook_to_weight,
    is_hook,
    is_polynomial_dominant,
    normalize_partition,
    weight_to_hook,
)
from .linalg import (
    GradedSpace,
    LinearOp,
    Subspace,
    commutant_dimension,
    kernel_intersection,
    koszul_tensor_op,
    simultaneous_eigenspaces,
    tensor_space,
)
from .superalgebra import (
    TensorConfig,
    bilinear_form,
    casimir_pairing,
    natural_casimir_scalar,
    natural_factor,
    pairing_eps,
    rectangle_pairing,
    two_rho,
)
from .modules import (
    RealizedModule,
    highest_weight_vectors,
    kappa_scalar,
    module_tensor_config,
    pieri_summands,
    realize_module,
)
from .schur import (
    decompose_two_rectangles,
    hook_schur_poly,
    lr_coeff,
    lr_product_oracle,
    remmel_check,
    schur_poly,
)
from .braid import (
    GeneratorImages,
    m_ops,
    rho_images,
    rho_prime_images,
    verify_braid_relations,
    verify_centralizer,
    verify_hecke_relations,
)
from .bratteli import (
    BratteliGraph,
    build_graph,
    irreducibility_check,
    paths_to,
    spectral_match,
    z0_value,
    z_values,
)

__version__ = "1.0.0"

from ._brane import (
    Model,
    ModelError,
    Operation,
    ParseError,
    check_associativity,
    check_commutativity,
    check_frobenius,
    check_zero,
    coproduct_dual,
    disk_model,
    gorenstein_info,
    odd_sphere_table,
    parse_model,
    path_model,
    perturb,
    product_dual,
    read_model,
    run,
    sphere_model,
    to_homology,
    transposition_sign_loop,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact arithmetic for abelian l-towers of multigraphs.

Build cyclic covers of Serre multigraphs, count spanning trees two
independent ways (matrix-tree determinants and cyclotomic resultants), and
extract the Iwasawa-type invariants governing the l-adic growth of the
counts along a tower.
"""

from .cyclotomic import (
    INFINITY,
    BudgetExceededError,
    CycElem,
    cyc_add,
    cyc_from_json,
    cyc_from_poly,
    cyc_int,
    cyc_mul,
    cyc_neg,
    cyc_one,
    cyc_pow,
    cyc_scale,
    cyc_sub,
    cyc_to_json,
    cyc_zero,
    epsilon,
    norm,
    ord_L,
    ord_int,
    phi_poly,
    resultant_with_phi,
    zeta_gen,
)
from .serre import (
    DisconnectedGraphError,
    Multigraph,
    adjacency_matrix,
    betti1,
    bouquet,
    cycle_graph,
    euler_characteristic,
    laplacian,
    multigraph_from_json,
    multigraph_to_json,
    spanning_tree_count,
    to_dot,
    valency_matrix,
    validate_serre,
)
from .towers import (
    DEFAULT_BUDGET_BITS,
    IwasawaInvariants,
    TowerReport,
    TowerSpec,
    build_tower_report,
    invariants,
    kappa_exact,
    level_norm,
    level_valuation,
    mu_lambda,
    ord_kappa,
    p_poly,
    q_poly,
    report_from_json,
    report_to_csv,
    report_to_json,
    stabilization_level,
    verify_bounds,
)
from .voltage import (
    VoltageGraph,
    artin_A_sigma,
    cayley_serre,
    derived_cover,
    orbit_h_poly,
    validate_voltage,
    verify_integer_decomposition,
    verify_product_formula,
    voltage_from_json,
    voltage_graph,
    voltage_to_json,
)
from .zeta import SpecialValues, ihara_Z, ihara_h, special_values

__version__ = "0.1.0"

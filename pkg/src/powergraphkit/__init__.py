"""Power graphs, directed power graphs, and cyclic subgroup graphs of finite
groups, with exact invariants and a machine-checked proposition suite."""

from .errors import (
    BudgetExceeded,
    CapExceeded,
    DisconnectedGraphError,
    GroupAxiomError,
    PathCapExceeded,
    PowerGraphKitError,
    SpecParseError,
)
from .groups import (
    FiniteGroup,
    GroupSpec,
    abelian_order_multiset,
    build_cyclic,
    build_group,
    build_product,
    build_quadratic_residues,
    build_units,
    cyclic_subgroup,
    group_center,
    same_cyclic_subgroup,
    subgroup_leq,
)
from .invariants import (
    CompositionPartition,
    InvariantReport,
    build_invariant_report,
    chromatic_number,
    chromatic_via_generator_peeling,
    clique_to_directed_path,
    composition_partition,
    construct_longest_path_cyclic,
    eccentricities,
    general_group_clique_number,
    independence_number,
    longest_directed_path_bruteforce,
    max_clique,
)
from .numtheory import (
    big_omega,
    divisors,
    factorize,
    is_fermat_prime,
    psi,
    totient,
)
from .powergraph import (
    CyclicClassGraph,
    Digraph,
    DirectedPowerGraph,
    Graph,
    PowerGraph,
    build_cyclic_class_graph,
    build_directed_power_graph,
    build_power_graph,
    class_graph_to_dot,
    digraph_to_dot,
    embed_classes,
    graph_to_dot,
)
from .structure import (
    ChordalityResult,
    StructureReport,
    build_structure_report,
    construct_even_hole_cyclic,
    find_anti_holes,
    find_holes,
    hamiltonian_lift,
    hole_out_vertex_orders,
    is_chordal,
    is_claw_free,
    is_complete,
    is_hamiltonian,
    is_planar,
    class_parent_child_simplicial,
    simplicial_gcd_check,
    simplicial_vertices,
    validate_hole,
    verify_hole_prime_necessity,
)
from .verify import (
    Caps,
    VerificationOutcome,
    default_suite,
    outcomes_to_csv,
    outcomes_to_json,
    run_check,
    run_sweep,
    theorem_ids,
)

__version__ = "0.1.0"

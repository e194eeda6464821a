"""Exact minor containment, Hadwiger numbers, minor-Ramsey searches,
explicit colorings, a vertex-weighting optimizer, and seeded Monte Carlo
experiments, with a single CLI front end."""

from .graph import (
    Graph,
    GraphDensity,
    complement,
    complete,
    complete_bipartite,
    contract_edge,
    core_extract,
    cycle,
    delete_vertices,
    density,
    disjoint_union,
    empty,
    from_edge_list,
    make,
    parse_edge_list,
    parse_graph6,
    path,
    random_gnm,
    random_gnp,
    star,
    vertex_connectivity,
    write_edge_list,
    write_graph6,
)
from .minors import (
    HadwigerResult,
    MinorModel,
    MinorSearch,
    bipartite_clique_minor,
    find_minor,
    hadwiger_number,
    has_minor,
    is_k3_minor_free,
    is_k4_minor_free,
    star_minor_extract,
    verify_minor_model,
)
from .gamma import (
    GammaResult,
    SolverConfig,
    constraint_gradient,
    constraint_value,
    gamma_grid_oracle,
    gamma_solve,
    gamma_uniform,
)
from .ramsey import (
    EdgeColoring,
    MonoWitness,
    RamseyVerdict,
    Target,
    clique_target,
    color_class,
    construct,
    exhaustive_check,
    minor_target,
    pigeonhole_upper_bound,
    proof_guided_finder,
    verify_lower_bound,
    walecki,
)
from .asymptotics import (
    Constants,
    ExperimentReport,
    bce_curve,
    bce_experiment,
    compute_constants,
    density_threshold_experiment,
    star_ramsey_experiment,
)

__version__ = "0.1.0"

"""Exact XX-ring correlation functions and their lattice-path combinatorics."""

from .chain import (
    BetheMomenta,
    ChainGeometry,
    bethe_ground_state,
    bethe_vector,
    build_sector_hamiltonian,
    enumerate_bethe_sets,
    hopping_matrix,
    hopping_power,
    norm_squared,
    sector_basis,
)
from .correlators import (
    equality_of_sums_report,
    laplace_generating_f,
    multi_particle_g,
    one_particle_g,
    persistence_exact,
    persistence_of_string,
    persistence_spectral,
    transition_amplitude,
    trig_path_count,
)
from .partitions import (
    boxed_partitions,
    lambda_to_mu,
    mu_to_lambda,
    staircase,
)
from .paths import (
    PathNest,
    conjugate_nest_partition_function,
    count_random_turns_paths,
    enumerate_nests,
    nest_partition_function,
    watermelon_count,
)
from .qpoly import QPolynomial, macmahon_count, macmahon_z, q_binomial
from .schur import (
    cauchy_binet,
    projection_average_q,
    schur_count_at_one,
    schur_determinant,
    schur_evaluate,
    vandermonde,
)

__version__ = "0.1.0"

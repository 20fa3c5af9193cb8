"""Coherence and mixedness measures for finite-dimensional density matrices."""

from .errors import *  # noqa: F401,F403
from .linalg import (
    HermitianEigen,
    eig_hermitian,
    fidelity,
    hs_norm,
    jacobi_eigh,
    l1_entrywise,
    matrix_sqrt,
    trace_norm,
    vn_entropy,
)
from .measures import (
    HSBound,
    c_l1,
    c_r,
    c_tr_mcms,
    c_tr_qubit,
    crossing_gap,
    find_crossing,
    hs_bound,
    m_l,
    m_tr,
    mcms_optimizer,
)
from .solver import (
    AscentResult,
    SolverConfig,
    SolverResult,
    c_g,
    c_tr_modified,
    geometric_coherence,
    grid_oracle_cg,
    grid_oracle_ctr,
    project_nonneg_diag,
    prox_trace_norm,
)
from .states import (
    dephase,
    from_bloch,
    incoherent,
    max_coherent,
    mcms,
    random_density,
    shift_unitary,
    to_bloch,
    validate_density,
)

__version__ = "0.1.0"

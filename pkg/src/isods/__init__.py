"""Decision engine and verification toolkit for the isoclinic Deligne-Simpson
problem: threshold orbits, existence verdicts, rigidity indices, and
independent combinatorial and geometric oracles."""

from .orbits import (
    AdjointOrbit,
    Block,
    HasseDiagram,
    NilpotentOrbit,
    closure_le,
    cone_contains,
    dim_centralizer,
    dim_centralizer_oracle,
    ls_induction,
)
from .partitions import (
    ParityClass,
    Partition,
    collapse,
    dominance_le,
    is_valid,
    lambda_evenly,
    lambda_tilde,
    partition,
    sum_parts,
    transpose,
)
from .root_data import (
    AffineDiagram,
    LieType,
    Slope,
    affine_marks,
    coxeter_number,
    exponents,
    is_elliptic_regular,
    is_regular,
    lie_type,
    parse_slope,
    phi_count,
    slope,
)
from .coxeter import AllowableSubset, UnsupportedSlopeError, coxeter_solve, enumerate_d_allowable, orbit_J_reg
from .rigidity import (
    RigidityReport,
    closed_form_delta,
    delta,
    is_cohomologically_rigid,
    non_resonant,
    rigidity_report,
    scan_rigid,
)
from .skeleton import GradedModel, jordan_type, minimal_jordan_type
from .solver import DSAnswer, ds_solve, ds_solve_q, o_nu

__all__ = [name for name in dir() if not name.startswith("_")]

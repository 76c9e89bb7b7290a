"""momentkit: verify and search homogeneous Lagrangian orbits.

Builds matrix representations of compact Lie algebras, evaluates moment maps
on linear and projective modules, certifies Lagrangian orbits with their
moduli dimension and isolation criteria, verifies reduction/cut/slice lift
claims upstairs, and searches for Lagrangian points by minimizing the squared
semisimple moment component.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as kernel_backend  # noqa: E402
from .kirwan import (  # noqa: E402
    SearchOutcome,
    SearchParams,
    UnsupportedRowError,
    certify_table_row,
    kirwan_objective,
    search_lagrangian,
)
from .liealg import (  # noqa: E402
    MatrixRep,
    RepresentationError,
    build_classical,
    build_g2,
    build_spin,
    center_and_derived,
    combine,
    direct_sum,
    dual_rep,
    exterior_power,
    make_rep,
    primitive_exterior_power,
    symmetric_power,
    tensor_rep,
)
from .reduction import (  # noqa: E402
    CircleData,
    ExceptionalDivisorError,
    LiftError,
    LiftReport,
    SliceFinding,
    cut_lift,
    reduction_lift,
    slice_lift_report,
    weighted_projective_scenario,
)
from .scenario import Scenario, ScenarioParseError, parse_scenario  # noqa: E402
from .symcheck import (  # noqa: E402
    CoalgValue,
    GeometryError,
    OrbitReport,
    PhaseSpace,
    generating_frame,
    isolation_equivalence,
    isotropy_algebra,
    lagrangian_verdict,
    linear_space,
    moduli_dimension,
    moment_map,
    omega_on_orbit,
    orbit_dimension,
    prepare_point,
    product_with_line,
    projective_space,
)
from .tolerances import Tolerances, from_env  # noqa: E402

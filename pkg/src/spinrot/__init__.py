"""Spin-1/2 rotation kernel with both operator sign conventions."""

from .bloch import (
    Frame,
    bloch_point,
    frame_sigma_dot,
    lemma3_check,
    make_frame,
    spinor_from_bloch,
    spinor_from_bloch_angles,
)
from .measurement import (
    Branch,
    DeviceOrientation,
    ImpossibleBranch,
    MeasurementResult,
    collapse,
    phase_loss_demo,
    project,
)
from .rotation import (
    AmbiguousAxis,
    AuditReport,
    AxisAngle,
    EulerMode,
    EulerZYZ,
    Handedness,
    RotationConvention,
    adjoint_so3,
    audit_convention,
    compose_euler,
    conjugate_pauli,
    lemma2_check,
    pauli_transport_duality,
    rodrigues,
    rotate_spinor,
    rotation_operator,
    u_z,
)
from .su2 import (
    TOL_ALG,
    TOL_AXIS,
    NonUnitAxis,
    NotSpecialUnitary,
    NotUnitary,
    SphericalDirection,
    ZeroSpinor,
    eigenspinors,
    identity2,
    pauli_x,
    pauli_y,
    pauli_z,
    projector_decomposition,
    sigma_along,
    tensor_pauli_basis,
)

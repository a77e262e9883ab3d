from .subpath import Policy, SubpathKey, SubpathServiceCurve, DelayBound, LatencyTerms, BurstVector
from .service_curves import (
    node_latency,
    residual_rate,
    subpath_latency_terms,
    tandem_service_curve,
    e2e_service_curve,
    delay_bound,
    output_arrival,
    backlog_bound,
)
from .matrix_system import (
    MatrixSystem,
    SystemSolution,
    build_matrix_system,
    reduced_system,
    system_determinant,
    solve_system,
)
from .oracle import fixed_point_oracle
from .stability import StabilityVerdict, broadcast_stability
from .analysis import ring_pmoo_analysis, bounds_from_latencies

__all__ = [
    'Policy',
    'SubpathKey',
    'SubpathServiceCurve',
    'DelayBound',
    'LatencyTerms',
    'BurstVector',
    'node_latency',
    'residual_rate',
    'subpath_latency_terms',
    'tandem_service_curve',
    'e2e_service_curve',
    'delay_bound',
    'output_arrival',
    'backlog_bound',
    'MatrixSystem',
    'SystemSolution',
    'build_matrix_system',
    'reduced_system',
    'system_determinant',
    'solve_system',
    'fixed_point_oracle',
    'StabilityVerdict',
    'broadcast_stability',
    'ring_pmoo_analysis',
    'bounds_from_latencies',
]

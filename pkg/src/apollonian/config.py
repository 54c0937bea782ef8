from dataclasses import dataclass


@dataclass(frozen=True)
class Config:
    """Numerical tolerances shared by the metric, oracle and geodesic code."""

    oracle_resolution: int = 4096
    refine_tol: float = 1e-12  # ternary search stops below this bracket width
    window_tol: float = 1e-10  # half-plane window doubling stops below this change
    window_scale: float = 8.0
    max_doublings: int = 20
    boundary_tol: float = 1e-12  # points this close to the boundary count as outside
    zero_clamp: float = 1e-12
    align_tol: float = 1e-9
    collinear_tol: float = 1e-12
    real_tol: float = 1e-9  # cross-ratio "is real" test, scaled by 1 + |Re|
    infinity_tol: float = 1e-14


DEFAULT = Config()

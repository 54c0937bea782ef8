"""Exception types raised by the geometry and metric routines."""


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DegenerateInput(GeometryError):
    """Coincident points, zero vectors and similar degenerate configurations."""


class PointOutsideDomain(GeometryError):
    pass


class UnboundedDomain(GeometryError):
    """Operation needs a bounded domain (ray exits, Funk, Hilbert)."""


class IneligibleDomain(GeometryError):
    """Domain is neither bounded nor has an unbounded boundary, or is not convex."""


class SearchFailed(RuntimeError):
    pass

"""Exception hierarchy for geometric degeneracies and domain violations."""


class GeometryError(Exception):
    """Base class for all kernel errors."""


class CoincidentPoints(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class NotOnLine(GeometryError):
    pass


class DualDegeneracy(GeometryError):
    """A perpendicular construction asked for perp(l, P) with l = dual(P)."""


class NearIsotropic(GeometryError):
    """Strict classification requested for a point too close to the absolute conic."""


class IsotropicInput(GeometryError):
    pass


class IsotropicMirror(GeometryError):
    pass


class CollinearVertices(GeometryError):
    pass


class CollinearVertex(GeometryError):
    """Angle measure requested for three collinear points."""


class IsotropicVertex(GeometryError):
    pass


class IsotropicSideline(GeometryError):
    pass


class VertexInput(GeometryError):
    pass


class SidelinePole(GeometryError):
    pass


class SidelinePerspector(GeometryError):
    pass


class SidelineInput(GeometryError):
    pass


class DegenerateConic(GeometryError):
    pass


class DiagonalMatrix(GeometryError):
    """The conic perspector is undefined for a diagonal matrix."""


class NotOnConic(GeometryError):
    pass


class NotACircle(GeometryError):
    pass


class RadiusOutOfRange(GeometryError):
    """circle_about needs 0 < d(M, P) < pi/2 i in the measure order."""


class ConcentricCircles(GeometryError):
    pass


class IsotropicPoint(GeometryError):
    pass


class DegenerateFoot(GeometryError):
    pass


class DegenerateTriple(GeometryError):
    pass


class DegenerateConfiguration(GeometryError):
    pass


class DegenerateStart(GeometryError):
    """A Tucker chain started at a vertex or produced one."""


class RegimeUnsupported(GeometryError):
    pass


class UndefinedAtFrame(GeometryError):
    """A catalog formula evaluated to the zero vector on this frame."""


class NoEuclideanLimit(GeometryError):
    pass


class NoIsogonicPoint(GeometryError):
    pass


class SamplingExhausted(GeometryError):
    pass

"""Triangle geometry in the elliptic and extended hyperbolic plane.

A computational kernel for a uniform complex-valued metric on the real
projective plane: joins and meets, segment and angle measures, triangle
frames with their characteristic matrices, conics and circles, a catalog
of triangle centers, cubic loci, and a randomized verification harness.
"""

from .errors import GeometryError
from .frame import Frame, build_frame
from .measure import Measure, distance, segment_measures
from .projective import Polarity

__all__ = [
    "Frame",
    "GeometryError",
    "Measure",
    "Polarity",
    "build_frame",
    "distance",
    "segment_measures",
]

__version__ = "0.1.0"

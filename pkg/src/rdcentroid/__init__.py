"""Centroids in the marking graph of the once-punctured torus."""
from .backend import MU0, TORUS, WHOLE, MappingClass, Marking, Subsurface, annulus
from .centroid import centroid_tuple, kappa, kappa_result, realize
from .config import get_config
from .farey import Slope, farey_distance, farey_geodesic
from .markings import ball, distance

__all__ = [
    "MU0", "TORUS", "WHOLE", "MappingClass", "Marking", "Subsurface", "annulus",
    "centroid_tuple", "kappa", "kappa_result", "realize", "get_config",
    "Slope", "farey_distance", "farey_geodesic", "ball", "distance",
]
__version__ = "0.1.0"

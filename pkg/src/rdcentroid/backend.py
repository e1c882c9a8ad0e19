"""Surface backends: subsurfaces, the mapping class action, projections.

Only the once-punctured torus S_1_1 is implemented.  Its curves are slopes,
its mapping class group is SL(2, Z) (acting on slopes projectively), every
proper essential subsurface is an annulus, and a marking is an ordered
Farey edge (base, transversal).
"""
from __future__ import annotations

import json
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .farey import (
    Matrix,
    Slope,
    adjacent,
    dehn_twist,
    farey_distance,
    farey_strip,
    mat_apply,
    mat_mul,
    twist_coordinate,
)


class UnknownSurface(ValueError):
    pass


@dataclass(frozen=True)
class Surface:
    genus: int
    punctures: int

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise ValueError("genus and punctures must be nonnegative")
        if self.xi < 1:
            raise ValueError(f"complexity {self.xi} < 1 is not supported")

    @property
    def xi(self) -> int:
        return 3 * self.genus - 3 + self.punctures

    @property
    def name(self) -> str:
        return f"S_{self.genus}_{self.punctures}"


S_1_1 = Surface(1, 1)


class Subsurface(NamedTuple):
    """S itself ("whole"), an annulus about a slope, or an opaque proper piece."""

    kind: str
    core: Optional[Slope] = None

    @property
    def xi_prime(self) -> int:
        if self.kind == "annulus":
            return 1
        return 1  # connected non-annular pieces of a xi=1 surface have xi = 1

    @property
    def is_annulus(self) -> bool:
        return self.kind == "annulus"

    @property
    def key(self):
        return (self.kind != "whole", self.kind, self.core or Slope(0, 0))

    def __str__(self):
        return "S" if self.kind == "whole" else f"A({self.core})"


WHOLE = Subsurface("whole")


def annulus(core: Slope) -> Subsurface:
    return Subsurface("annulus", core)


def sort_subsurfaces(ws: Iterable[Subsurface]) -> list[Subsurface]:
    return sorted(set(ws), key=lambda w: w.key)


class Marking(NamedTuple):
    """Ordered Farey edge: base curve and a transversal meeting it once."""

    base: Slope
    transversal: Slope

    def is_valid(self) -> bool:
        return self.base.is_canonical() and self.transversal.is_canonical() and adjacent(self.base, self.transversal)

    def to_json(self, surface: str = "S_1_1") -> dict:
        return {"surface": surface, "base": str(self.base), "transversal": str(self.transversal)}

    @classmethod
    def from_json(cls, obj: dict) -> "Marking":
        if not isinstance(obj, dict) or "base" not in obj or "transversal" not in obj:
            raise ValueError("marking JSON needs 'base' and 'transversal'")
        surface = obj.get("surface", "S_1_1")
        if surface != "S_1_1":
            raise UnknownSurface(surface)
        m = cls(Slope.parse(obj["base"]), Slope.parse(obj["transversal"]))
        if not m.is_valid():
            raise ValueError(f"base and transversal of {m} are not adjacent")
        return m

    def __str__(self):
        return f"({self.base}, {self.transversal})"


MU0 = Marking(Slope(0, 1), Slope(1, 0))

# generator alphabet for S_1_1; lower case is the inverse
GENERATORS: dict[str, Matrix] = {
    "L": (1, 0, 1, 1),
    "l": (1, 0, -1, 1),
    "R": (1, 1, 0, 1),
    "r": (1, -1, 0, 1),
    "F": (0, -1, 1, 0),
    "f": (0, 1, -1, 0),
}
IDENTITY: Matrix = (1, 0, 0, 1)


@dataclass(frozen=True)
class MappingClass:
    word: tuple[str, ...]
    matrix: Matrix

    @classmethod
    def from_word(cls, word: Sequence[str]) -> "MappingClass":
        m = IDENTITY
        for w in word:
            if w not in GENERATORS:
                raise ValueError(f"unknown generator {w!r}")
            m = mat_mul(m, GENERATORS[w])
        return cls(tuple(word), m)

    @classmethod
    def from_matrix(cls, m: Matrix) -> "MappingClass":
        a, b, c, d = m
        if a * d - b * c != 1:
            raise ValueError("mapping class matrix must have determinant 1")
        return cls((), m)

    def __mul__(self, other: "MappingClass") -> "MappingClass":
        return MappingClass(self.word + other.word, mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "MappingClass":
        inv = {"L": "l", "l": "L", "R": "r", "r": "R", "F": "f", "f": "F"}
        a, b, c, d = self.matrix
        return MappingClass(tuple(inv[w] for w in reversed(self.word)), (d, -b, -c, a))

    def to_json(self) -> dict:
        return {"word": list(self.word)}

    @classmethod
    def from_json(cls, obj: dict) -> "MappingClass":
        return cls.from_word(obj["word"])


def curve_distance(w: Subsurface, p, q) -> int:
    """Distance in C(W) between two projections."""
    if w.kind == "annulus":
        return abs(p - q)
    return farey_distance(p, q)


class SurfaceBackend(ABC):
    surface: Surface

    @abstractmethod
    def apply(self, g: MappingClass, mu): ...

    @abstractmethod
    def project(self, w: Subsurface, mu): ...

    @abstractmethod
    def subsurfaces_between(self, x, y, threshold: int) -> list[Subsurface]: ...

    @abstractmethod
    def neighbors(self, mu) -> list: ...

    def d(self, w: Subsurface, x, y) -> int:
        return curve_distance(w, self.project(w, x), self.project(w, y))

    def transverse(self, v: Subsurface, w: Subsurface) -> bool:
        raise NotImplementedError


class TorusBackend(SurfaceBackend):
    """Exact backend for the once-punctured torus."""

    surface = S_1_1

    def apply(self, g: MappingClass, mu: Marking) -> Marking:
        m = g.matrix
        return Marking(mat_apply(m, mu.base), mat_apply(m, mu.transversal))

    def project(self, w: Subsurface, mu: Marking):
        if w.kind == "whole":
            return mu.base
        if w.kind != "annulus":
            raise ValueError(f"no {w.kind} subsurfaces in S_1_1")
        g = w.core
        return twist_coordinate(g, mu.base if mu.base != g else mu.transversal)

    def neighbors(self, mu: Marking) -> list[Marking]:
        a, t = mu
        return [Marking(a, dehn_twist(a, t, 1)), Marking(a, dehn_twist(a, t, -1)), Marking(t, a)]

    def transverse(self, v: Subsurface, w: Subsurface) -> bool:
        # distinct curves on S_1_1 always intersect, so distinct annuli overlap;
        # an annulus is nested in S, never transverse to it
        return v.is_annulus and w.is_annulus and v.core != w.core

    def candidate_annuli(self, x: Marking, y: Marking) -> list[Slope]:
        """Cores of every annulus that can see x and y more than 1 apart."""
        return farey_strip(x.base, y.base)

    def subsurfaces_between(self, x: Marking, y: Marking, threshold: int) -> list[Subsurface]:
        """Whole plus every annulus W with d_W(x, y) > threshold.

        An annulus whose core misses the strip of Farey triangles between the
        two bases sees them at most 1 apart, so for threshold >= 1 the strip
        vertices are a complete candidate list.
        """
        if threshold < 1:
            raise ValueError("threshold must be at least 1")
        out = [WHOLE]
        if x == y:
            return out
        for g in sorted(self.candidate_annuli(x, y)):
            w = annulus(g)
            if self.d(w, x, y) > threshold:
                out.append(w)
        return out


TORUS = TorusBackend()

_BACKENDS = {"S_1_1": TORUS}


def get_backend(name: str) -> SurfaceBackend:
    try:
        return _BACKENDS[name]
    except KeyError:
        raise UnknownSurface(name) from None


# module-level conveniences bound to the torus backend
def apply(g: MappingClass, mu: Marking) -> Marking:
    return TORUS.apply(g, mu)


def project(w: Subsurface, mu: Marking):
    return TORUS.project(w, mu)


def subsurfaces_between(x: Marking, y: Marking, threshold: int) -> list[Subsurface]:
    return TORUS.subsurfaces_between(x, y, threshold)


def d_W(w: Subsurface, x: Marking, y: Marking) -> int:
    return TORUS.d(w, x, y)


def load_marking(path) -> Marking:
    with open(path) as fh:
        return Marking.from_json(json.load(fh))

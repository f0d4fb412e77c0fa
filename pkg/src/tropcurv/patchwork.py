"""Sign distributions, the orthant action on them, and the patchworked real
part of a tropical hypersurface."""
from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .core_geometry import LatticeSimplex, is_elementary
from .errors import DimensionMismatch, IgnoredSignWarning, NotGeneric, UnknownExponent
from .tropical import HypersurfaceComplex, TropicalPolynomial

__all__ = [
    "SignDistribution",
    "orthants",
    "orthant_label",
    "twist",
    "cell_present",
    "RealPart",
    "real_part",
    "OrbitReport",
    "orbit_analysis",
]


class SignDistribution(Mapping):
    """Map exponent -> +1/-1."""

    def __init__(self, signs: Mapping):
        self.signs = {tuple(int(c) for c in a): (1 if s > 0 else -1) for a, s in dict(signs).items()}
        dims = {len(a) for a in self.signs}
        if len(dims) > 1:
            raise DimensionMismatch("exponents of different lengths")
        self.ambient_dim = dims.pop() if dims else 0

    @classmethod
    def constant(cls, exponents: Iterable, sign: int = 1) -> "SignDistribution":
        return cls({a: sign for a in exponents})

    @classmethod
    def random(cls, exponents: Iterable, rng: random.Random) -> "SignDistribution":
        return cls({a: rng.choice((1, -1)) for a in exponents})

    @classmethod
    def for_polynomial(cls, f: TropicalPolynomial, signs: Mapping | None = None) -> "SignDistribution":
        """Signs for every exponent of ``f``; missing ones default to +."""
        signs = dict(signs or {})
        return cls({a: signs.get(a, 1) for a in f.exponents})

    def __getitem__(self, alpha):
        try:
            return self.signs[tuple(alpha)]
        except KeyError:
            raise UnknownExponent(f"no sign for exponent {tuple(alpha)}") from None

    def __iter__(self):
        return iter(self.signs)

    def __len__(self):
        return len(self.signs)

    def __neg__(self):
        return SignDistribution({a: -s for a, s in self.signs.items()})

    def __eq__(self, other):
        if isinstance(other, SignDistribution):
            return self.signs == other.signs
        return NotImplemented

    def __repr__(self):
        body = ", ".join(f"{a}:{'+' if s > 0 else '-'}" for a, s in sorted(self.signs.items()))
        return f"SignDistribution({{{body}}})"


def orthants(dim: int) -> list[tuple[int, ...]]:
    """All z in (Z/2)^dim in binary order."""
    return list(itertools.product((0, 1), repeat=dim))


def orthant_label(z) -> str:
    return "".join("-" if zi else "+" for zi in z)


def _parity(z, alpha) -> int:
    return sum(zi * a for zi, a in zip(z, alpha)) & 1


def twist(theta: SignDistribution, z) -> SignDistribution:
    """(S_z theta)(a) = (-1)^(z.a) theta(a)."""
    z = tuple(int(zi) & 1 for zi in z)
    if theta.signs and len(z) != theta.ambient_dim:
        raise DimensionMismatch(f"orthant has length {len(z)}, exponents {theta.ambient_dim}")
    return SignDistribution(
        {a: -s if _parity(z, a) else s for a, s in theta.signs.items()}
    )


def twisted_signs(vertices, theta: SignDistribution, z) -> list[int]:
    return [-theta[a] if _parity(z, a) else theta[a] for a in vertices]


def cell_present(dual_vertices, theta: SignDistribution, z) -> bool:
    """The copy s_z(c) is present iff the twisted signs on Vert(c-dual) are not constant."""
    dual_vertices = [tuple(a) for a in dual_vertices]
    if any(len(a) != len(z) for a in dual_vertices):
        raise DimensionMismatch("orthant and exponent lengths differ")
    return len(set(twisted_signs(dual_vertices, theta, z))) == 2


@dataclass
class RealPart:
    """Per orthant, the ids of the vertex / edge / 2-face copies that are present."""

    orthants: list
    vertices: dict
    edges: dict = field(default_factory=dict)
    faces: dict = field(default_factory=dict)

    def nonempty_orthants(self) -> list:
        return [z for z in self.orthants if self.vertices[z] or self.edges.get(z) or self.faces.get(z)]

    def to_dict(self) -> dict:
        out = {}
        for z in self.orthants:
            ids = [f"v{i}" for i in self.vertices[z]]
            ids += [f"e{i}" for i in self.edges.get(z, [])]
            ids += [f"f{i}" for i in self.faces.get(z, [])]
            out[orthant_label(z)] = ids
        return out


def real_part(V: HypersurfaceComplex, theta: SignDistribution) -> RealPart:
    """Select the symmetric copies of cells forming the patchworked real part.

    Only the signs at vertices of dual cells are consulted; signs on other
    exponents are ignored (with an :class:`IgnoredSignWarning`).
    """
    if not V.generic:
        raise NotGeneric("patchworking needs a generic tropical polynomial")
    used = {a for c in V.subdivision.maximal_cells for a in c.vertices}
    ignored = sorted(set(theta) - used)
    if ignored:
        warnings.warn(
            f"signs on non-vertex exponents {ignored} are ignored", IgnoredSignWarning, stacklevel=2
        )
    zs = orthants(V.poly.ambient_dim)

    def pick(cells, dual):
        return {z: [c.id for c in cells if cell_present(dual(c), theta, z)] for z in zs}

    return RealPart(
        orthants=zs,
        vertices=pick(V.vertices, lambda v: v.cell.vertices),
        edges=pick(V.edges, lambda e: e.dual.vertices) if V.edges else {},
        faces=pick(V.faces, lambda c: c.dual.vertices) if V.faces else {},
    )


@dataclass
class OrbitReport:
    simplex: tuple
    elementary: bool
    classes: int
    orbit_size: int
    transitive: bool

    def to_dict(self) -> dict:
        return {
            "simplex": [list(v) for v in self.simplex],
            "elementary": self.elementary,
            "classes": self.classes,
            "orbit_size": self.orbit_size,
            "transitive": self.transitive,
        }


def _canonical(signs):
    # representative of a sign vector modulo global flip
    return tuple(signs) if signs[0] > 0 else tuple(-s for s in signs)


def orbit_analysis(s) -> OrbitReport:
    """Orbits of the twist action on sign distributions of Vert(s) modulo global flip.

    Every one of the 2^(n+1) classes is used as a starting point; the action
    is transitive iff each orbit is the whole set.
    """
    s = s if isinstance(s, LatticeSimplex) else LatticeSimplex(tuple(s))
    verts = s.vertices
    d = s.dim
    zs = orthants(d)
    classes = {_canonical((1,) + rest) for rest in itertools.product((1, -1), repeat=d)}
    sizes = []
    for start in sorted(classes):
        theta = SignDistribution(dict(zip(verts, start)))
        orbit = {_canonical(twisted_signs(verts, theta, z)) for z in zs}
        sizes.append(len(orbit))
    return OrbitReport(
        simplex=verts,
        elementary=is_elementary(s),
        classes=len(classes),
        orbit_size=sizes[0],
        transitive=all(n == len(classes) for n in sizes),
    )

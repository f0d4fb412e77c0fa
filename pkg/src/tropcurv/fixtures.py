"""Bundled example polynomials.

Coefficients of the curve fixtures come from the strictly concave function
u(a) = -(a1^2 + a1*a2 + a2^2), which lifts each dilated simplex to a unimodular triangulation.
"""
from __future__ import annotations

from .tropical import TropicalPolynomial, write_document

__all__ = [
    "harnack_signs",
    "line",
    "plane_curve",
    "conic",
    "cubic",
    "surface_cubic",
    "witness",
    "ALL",
    "document",
]


def harnack_signs(exponents) -> dict:
    """+ at exponents with all coordinates even, - elsewhere."""
    return {a: 1 if all(c % 2 == 0 for c in a) else -1 for a in exponents}


def _simplex_points(d: int, dim: int):
    if dim == 1:
        return [(i,) for i in range(d + 1)]
    return [(i,) + rest for i in range(d + 1) for rest in _simplex_points(d - i, dim - 1)]


def line() -> TropicalPolynomial:
    return TropicalPolynomial({(0, 0): 0, (1, 0): 0, (0, 1): 0}, 2)


def plane_curve(d: int) -> TropicalPolynomial:
    return TropicalPolynomial({(i, j): -(i * i + i * j + j * j) for i, j in _simplex_points(d, 2)}, 2)


def conic() -> TropicalPolynomial:
    return plane_curve(2)


def cubic() -> TropicalPolynomial:
    return plane_curve(3)


def surface_cubic() -> TropicalPolynomial:
    """Degree 3 surface whose subdivision is a unimodular triangulation (27 tetrahedra)."""
    return TropicalPolynomial(
        {
            (i, j, k): -(3 * i * i + 4 * j * j + 5 * k * k + 2 * i * j + 3 * j * k + i * k)
            for i, j, k in _simplex_points(3, 3)
        },
        3,
    )


def witness() -> TropicalPolynomial:
    """Single non-primitive elementary triangle (0,0),(1,0),(0,3)."""
    return TropicalPolynomial({(0, 0): 0, (1, 0): 0, (0, 3): 0}, 2)


ALL = {
    "line": line,
    "conic": conic,
    "cubic": cubic,
    "surface_cubic": surface_cubic,
    "witness": witness,
}


def document(name: str) -> dict:
    """Input document of a fixture, signed by the Harnack rule."""
    f = ALL[name]()
    return write_document(f, harnack_signs(f.exponents))

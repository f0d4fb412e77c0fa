"""Random inputs shared by the test modules."""
import random

from tropcurv.core_geometry import LatticeSimplex, det, is_elementary
from tropcurv.tropical import TropicalPolynomial, classify


def random_simplex(dim, rng: random.Random, box=3):
    while True:
        pts = [tuple(rng.randint(-box, box) for _ in range(dim)) for _ in range(dim + 1)]
        if det([[p - q for p, q in zip(v, pts[0])] for v in pts[1:]]) != 0:
            return LatticeSimplex(tuple(pts))


def random_elementary(dim, rng: random.Random, box=3):
    while True:
        s = random_simplex(dim, rng, box)
        if is_elementary(s):
            return s


def non_elementary_from(s: LatticeSimplex, rng: random.Random) -> LatticeSimplex:
    """Double one edge from vertex 0: that edge vanishes mod 2."""
    v = list(s.vertices)
    k = rng.randrange(1, len(v))
    v[k] = tuple(a + 2 * (b - a) for a, b in zip(v[0], v[k]))
    return LatticeSimplex(tuple(v))


def dilated_points(d, dim=2):
    if dim == 1:
        return [(i,) for i in range(d + 1)]
    return [(i,) + rest for i in range(d + 1) for rest in dilated_points(d - i, dim - 1)]


def random_nonsingular_curve(d, rng: random.Random) -> TropicalPolynomial:
    pts = dilated_points(d)
    while True:
        a, c = rng.randint(2, 6), rng.randint(2, 6)
        b = rng.randint(-1, 1)
        terms = {
            (i, j): -(a * i * i + b * i * j + c * j * j) * 4 + rng.randint(-1, 1)
            for i, j in pts
        }
        f = TropicalPolynomial(terms, 2)
        if classify(f).non_singular:
            return f


def random_signs(exponents, rng: random.Random) -> dict:
    return {a: rng.choice((1, -1)) for a in exponents}

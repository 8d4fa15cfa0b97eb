"""The extremal cactus families and their closed-form spectra.

H(s, k): a hub carrying s triangles and k pendant edges (n = 2s + k + 1).
L(s, k): a hub carrying s triangles, k - 1 pendant edges and one pendant path
of length two (n = 2s + k + 2).

Besides the constructors this module holds the exact factored characteristic
polynomials for both families, the superseded legacy formulas kept for an
erratum regression, and the extremal-answer calculator that maps a vertex
count plus constraint to the predicted maximizer and its radius.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .graph import Graph, from_edges
from .polynomials import IntPolynomial, largest_real_root, monomial_shift


@dataclass(frozen=True)
class FamilyParams:
    """Validated (family, s, k) with the derived vertex count."""
    family: str  # "H" or "L"
    s: int
    k: int

    def __post_init__(self):
        if self.family not in ("H", "L"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.s < 0 or self.k < 0:
            raise ValueError("s and k must be nonnegative")
        if self.family == "H" and self.s + self.k < 1:
            raise ValueError("H(0, 0) is degenerate and not constructible")
        if self.family == "L" and self.k < 1:
            raise ValueError("L requires k >= 1")

    @property
    def n(self) -> int:
        return 2 * self.s + self.k + (1 if self.family == "H" else 2)


def build_H(s: int, k: int) -> Graph:
    """Hub 0, triangles {0, 2i+1, 2i+2}, pendants 2s+1..2s+k."""
    params = FamilyParams("H", s, k)
    n = params.n
    edges = []
    for i in range(s):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    for j in range(2 * s + 1, 2 * s + 1 + k):
        edges.append((0, j))
    return from_edges(n, edges)


def build_L(s: int, k: int) -> Graph:
    """Hub 0, triangles {0, 2i+1, 2i+2}, pendant path 0-(2s+1)-(2s+2),
    then k-1 pendants."""
    params = FamilyParams("L", s, k)
    n = params.n
    edges = []
    for i in range(s):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    a, b = 2 * s + 1, 2 * s + 2
    edges += [(0, a), (a, b)]
    for j in range(2 * s + 3, n):
        edges.append((0, j))
    return from_edges(n, edges)


def build(params: FamilyParams) -> Graph:
    return build_H(params.s, params.k) if params.family == "H" \
        else build_L(params.s, params.k)


# ---------------------------------------------------------------------------
# Closed-form characteristic polynomials
# ---------------------------------------------------------------------------

def _check_exponent(value: int, what: str) -> int:
    if value < 0 or value % 2:
        raise ValueError(f"exponent {what} = {value}/2 is not a nonnegative integer")
    return value // 2


def h_cubic(n: int, k: int) -> IntPolynomial:
    """The cubic factor for H: x^3 - (n+3)x^2 + 3n x - 2n + 2k + 2."""
    return IntPolynomial((-2 * n + 2 * k + 2, 3 * n, -(n + 3), 1))


def l_quintic(n: int, k: int) -> IntPolynomial:
    """The quintic factor for L."""
    return IntPolynomial((-2 * n + 2 * k + 4, 9 * n - 6 * k - 12,
                          -(12 * n - 2 * k - 10), 6 * n + 4, -(n + 5), 1))


def psi_H(n: int, k: int) -> IntPolynomial:
    """Characteristic polynomial of Q(H(s, k)) with n = 2s + k + 1, expanded:
    (x-1)^((n+k-3)/2) (x-3)^((n-k-3)/2) times the cubic factor."""
    if k >= n:
        raise ValueError(f"k = {k} must be < n = {n}")
    if (n - k - 1) % 2:
        raise ValueError(f"n - k - 1 = {n - k - 1} must be even")
    e1 = _check_exponent(n + k - 3, "(n+k-3)")
    e3 = _check_exponent(n - k - 3, "(n-k-3)")
    return monomial_shift(1) ** e1 * monomial_shift(3) ** e3 * h_cubic(n, k)


def psi_L(n: int, k: int) -> IntPolynomial:
    """Characteristic polynomial of Q(L(s, k)) with n = 2s + k + 2, expanded."""
    if k < 1:
        raise ValueError("L requires k >= 1")
    if k >= n:
        raise ValueError(f"k = {k} must be < n = {n}")
    if (n - k) % 2:
        raise ValueError(f"n - k = {n - k} must be even")
    e1 = _check_exponent(n + k - 6, "(n+k-6)")
    e3 = _check_exponent(n - k - 4, "(n-k-4)")
    return monomial_shift(1) ** e1 * monomial_shift(3) ** e3 * l_quintic(n, k)


def legacy_h_cubic(n: int, k: int) -> IntPolynomial:
    return IntPolynomial((n - k - 7, -(n - 4 * k - 12), -(k + 6), 1))


def legacy_l_quintic(n: int, k: int) -> IntPolynomial:
    return IntPolynomial((n - k - 8, -(4 * n - 7 * k - 40),
                          4 * n - 14 * k - 54, -(n - 7 * k - 32), -(k + 9), 1))


def psi_legacy(family: str, n: int, k: int) -> IntPolynomial:
    """Superseded published formulas, kept only so tests can pin down the
    documented erratum (they disagree with psi_H/psi_L for n >= 5)."""
    if family == "H":
        if k >= n:
            raise ValueError(f"k = {k} must be < n = {n}")
        if (n - k - 1) % 2:
            raise ValueError(f"n - k - 1 = {n - k - 1} must be even")
        e1 = _check_exponent(n + k - 3, "(n+k-3)")
        e3 = _check_exponent(n - k - 3, "(n-k-3)")
        core = legacy_h_cubic(n, k)
    elif family == "L":
        if k < 1:
            raise ValueError("L requires k >= 1")
        if (n - k) % 2:
            raise ValueError(f"n - k = {n - k} must be even")
        e1 = _check_exponent(n + k - 6, "(n+k-6)")
        e3 = _check_exponent(n - k - 4, "(n-k-4)")
        core = legacy_l_quintic(n, k)
    else:
        raise ValueError(f"unknown family {family!r}")
    return monomial_shift(1) ** e1 * monomial_shift(3) ** e3 * core


# ---------------------------------------------------------------------------
# Extremal answers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedFormRadius:
    """Radius of the form (a + sqrt(b)) / c with integer a, b, c."""
    a: int
    b: int
    c: int

    def value(self) -> float:
        return (self.a + math.sqrt(self.b)) / self.c

    def to_json(self) -> str:
        return json.dumps({"closed_form": [self.a, self.b, self.c]})


@dataclass(frozen=True)
class PolyRootRadius:
    """Radius defined as the largest real root of a polynomial in a bracket."""
    poly: IntPolynomial
    bracket: tuple

    def value(self, tol: float = 1e-12) -> float:
        return largest_real_root(self.poly, self.bracket, tol=tol)

    def to_json(self) -> str:
        return json.dumps({"poly": [str(c) for c in self.poly.coeffs],
                           "bracket": [self.bracket[0], self.bracket[1]]})


@dataclass(frozen=True)
class ExtremalAnswer:
    """Predicted maximizer plus its radius, symbolically and numerically."""
    maximizer: Graph
    params: FamilyParams
    descriptor: object  # ClosedFormRadius | PolyRootRadius
    radius: float


def _poly_descriptor(poly: IntPolynomial, n: int) -> PolyRootRadius:
    # all signless Laplacian eigenvalues lie in [0, 2(n-1)]
    return PolyRootRadius(poly=poly, bracket=(0.0, float(2 * n)))


def _answer(params: FamilyParams, descriptor) -> ExtremalAnswer:
    return ExtremalAnswer(maximizer=build(params), params=params,
                          descriptor=descriptor, radius=descriptor.value())


def extremal_answer(n: int, matching: int | None = None,
                    pendants: int | None = None) -> ExtremalAnswer:
    """Predicted maximizer of the signless Laplacian spectral radius over
    cacti on n vertices, under at most one of the two constraints.

    matching constraint: perfect-matching case for n = 2m, the closed form
    for n = 2m + 1, and the cubic's largest root for n >= 2m + 2.
    pendant constraint: H(s, k) when n - k is odd, L(s, k) when even.
    no constraint: parity-based closed forms.
    """
    if n < 3:
        raise ValueError("n >= 3 required")
    if matching is not None and pendants is not None:
        raise ValueError("at most one constraint")

    if matching is not None:
        m = matching
        if not 1 <= m <= n // 2:
            raise ValueError(f"matching number {m} infeasible for n = {n}")
        if n == 2 * m:
            return _answer(FamilyParams("H", m - 1, 1),
                           ClosedFormRadius(n + 1, n * n - 2 * n + 9, 2))
        if n == 2 * m + 1:
            return _answer(FamilyParams("H", m, 0),
                           ClosedFormRadius(n + 2, n * n - 4 * n + 12, 2))
        cubic = IntPolynomial((-4 * m + 4, 3 * n, -(n + 3), 1))
        return _answer(FamilyParams("H", m - 1, n - 2 * m + 1),
                       _poly_descriptor(cubic, n))

    if pendants is not None:
        k = pendants
        if not 0 <= k < n:
            raise ValueError(f"pendant count {k} infeasible for n = {n}")
        if (n - k) % 2 == 1:
            s = (n - k - 1) // 2
            params = FamilyParams("H", s, k)
            return _answer(params, _poly_descriptor(h_cubic(n, k), n))
        if k == 0:
            raise ValueError("no prediction for even n - k with zero pendants")
        s = (n - k - 2) // 2
        if s < 0:
            raise ValueError(f"pendant count {k} infeasible for n = {n}")
        params = FamilyParams("L", s, k)
        return _answer(params, _poly_descriptor(l_quintic(n, k), n))

    if n % 2 == 1:
        return _answer(FamilyParams("H", (n - 1) // 2, 0),
                       ClosedFormRadius(n + 2, n * n - 4 * n + 12, 2))
    return _answer(FamilyParams("H", n // 2 - 1, 1),
                   ClosedFormRadius(n + 1, n * n - 2 * n + 9, 2))


def superseded_conjecture_bound(n: int) -> float:
    """The superseded odd-case bound (5 + sqrt(4n - 3)) / 2, kept only for the
    negative regression check; the proved bound is strictly larger at n = 5."""
    return (5 + math.sqrt(4 * n - 3)) / 2

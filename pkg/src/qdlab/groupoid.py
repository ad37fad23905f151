"""Exact-arithmetic ratio-coordinate calculus on decorated ideal triangulations.

Ratio coordinates assign each decorated triangle a pair of nonzero complex
numbers.  The diagonal flip acts on the two triangles of a quadrilateral by

    x' = x . y = (x1 y1, x1 y2 + x2),
    y' = x * y = (y1 x2 / (x1 y2 + x2), y2 / (x1 y2 + x2)),

and the distinguished-corner change by rho(x) = (x2/x1, 1/x1), with
rho^3 = id.  (The first component multiplies the first coordinates; the
equivalent birational map in operator coordinates reads w1 = u1 u2,
z1 = u1 v2 + v1.  Only this version satisfies the pentagon and inversion
relations and preserves the canonical two-form, all of which are enforced
exactly by the tests.)  Everything here runs over Gaussian rationals (exact complex
numbers with Fraction parts), so the groupoid relations are checked as exact
identities at random sample points; by rationality of the maps, generic
agreement is equivalent to the identity of rational functions.

Decoration conventions match the flip figure: in omega_{ij} the triangle
carrying i sits on the left of the quadrilateral (corner at the left vertex)
and j on the right (corner at the bottom); after the flip i is on top and j
below:

        *\\--------+                +--------+
        | \\   i   |   omega_ij     |   i   /|
        |  \\      |   ------->     |  ..  / |
        |   \\     |                | .   /  |
        |  x \\  y |                | x' / y'|
        |     \\   |                |   /    |
        |      \\  |                |  /     |
        +-------\\*|                |*/------+

The pentagon relation composes flips left to right:
omega_ij then omega_ik then omega_jk equals omega_jk then omega_ij; the
inversion relation composes omega_ij, rho_i, omega_ji against the
transposition (ij) followed by rho_j then rho_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateFlip, DegenerateQuad

__all__ = [
    "GaussianRational",
    "RatioPoint",
    "flip",
    "corner_change",
    "ptolemy",
    "lambda_ratio_points",
    "verify_pentagon_exact",
    "verify_inversion_exact",
    "form_preservation_check",
    "corner_form_check",
    "random_point",
]


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, re, im=0) -> "GaussianRational":
        return cls(Fraction(re), Fraction(im))

    def __add__(self, o):
        return GaussianRational(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, o):
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    def __truediv__(self, o):
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0


ZERO = GaussianRational.of(0)
ONE = GaussianRational.of(1)


@dataclass(frozen=True)
class RatioPoint:
    """A pair of nonzero Gaussian rationals (x1, x2)."""

    x1: GaussianRational
    x2: GaussianRational

    def __post_init__(self):
        if self.x1.is_zero or self.x2.is_zero:
            raise ValueError("ratio coordinates must be nonzero")


def flip(x: RatioPoint, y: RatioPoint) -> tuple[RatioPoint, RatioPoint]:
    """The diagonal flip (x, y) -> (x.y, x*y).  Exact."""
    den = x.x1 * y.x2 + x.x2
    if den.is_zero:
        raise DegenerateFlip("flip denominator x1 y2 + x2 vanishes")
    xd = RatioPoint(x.x1 * y.x1, den)
    ys = RatioPoint(y.x1 * x.x2 / den, y.x2 / den)
    return xd, ys


def corner_change(x: RatioPoint) -> RatioPoint:
    """rho(x) = (x2/x1, 1/x1); applying three times is the identity."""
    return RatioPoint(x.x2 / x.x1, ONE / x.x1)


def ptolemy(
    a: GaussianRational,
    b: GaussianRational,
    c: GaussianRational,
    d: GaussianRational,
    lam: GaussianRational,
) -> GaussianRational:
    """The flipped diagonal lambda'(d') = (ac + bd)/lambda(d)."""
    num = a * c + b * d
    if num.is_zero:
        raise DegenerateQuad("ac + bd = 0: flipped Ptolemy coordinate vanishes")
    return num / lam


def lambda_ratio_points(p, q, r, s, lam):
    """Ratio points of a flip quadrilateral from its lambda-coordinates.

    The quadrilateral has consecutive sides p, q, r, s (so the diagonals
    satisfy lam * lam' = p r + q s) and pre-flip diagonal lam.  With the
    distinguished corners of the flip figure, the pre-flip triangles carry

        x = (p/lam, s/lam),        y = (lam/q, r/q),

    and the post-flip triangles

        x' = (p/q, lam'/q),        y' = (s/lam', r/lam').

    This is the unique per-triangle assignment under which the ratio-map flip
    reproduces the Ptolemy exchange identically; returns ((x, y), (x', y')).
    """
    lam2 = ptolemy(p, q, r, s, lam)
    x = RatioPoint(p / lam, s / lam)
    y = RatioPoint(lam / q, r / q)
    xp = RatioPoint(p / q, lam2 / q)
    yp = RatioPoint(s / lam2, r / lam2)
    return (x, y), (xp, yp)


def random_point(rng, scale: int = 8) -> RatioPoint:
    """Random nonzero Gaussian-rational ratio point with small numerators."""

    def nz():
        while True:
            re = Fraction(int(rng.integers(-scale, scale + 1)), int(rng.integers(1, 5)))
            im = Fraction(int(rng.integers(-scale, scale + 1)), int(rng.integers(1, 5)))
            g = GaussianRational(re, im)
            if not g.is_zero:
                return g

    return RatioPoint(nz(), nz())


def _apply_word(word, coords: dict) -> dict:
    """Apply a word of moves to labeled coordinates; raises DegenerateFlip."""
    coords = dict(coords)
    for move in word:
        kind = move[0]
        if kind == "flip":
            _, i, j = move
            coords[i], coords[j] = flip(coords[i], coords[j])
        elif kind == "rho":
            _, i = move
            coords[i] = corner_change(coords[i])
        elif kind == "swap":
            _, i, j = move
            coords[i], coords[j] = coords[j], coords[i]
        else:
            raise ValueError(f"unknown move {move!r}")
    return coords


def verify_pentagon_exact(samples) -> dict:
    """Exact pentagon check on triples: the flip sequences
    omega_ij, omega_ik, omega_jk and omega_jk, omega_ij agree identically.

    samples: iterable of (x_i, x_j, x_k) RatioPoint triples.  Degenerate
    samples (vanishing flip denominators) are skipped and counted.  Returns
    {"checked", "skipped", "pass", "witness"}.
    """
    left = [("flip", "i", "j"), ("flip", "i", "k"), ("flip", "j", "k")]
    right = [("flip", "j", "k"), ("flip", "i", "j")]
    checked = skipped = 0
    for (xi, xj, xk) in samples:
        coords = {"i": xi, "j": xj, "k": xk}
        try:
            a = _apply_word(left, coords)
            b = _apply_word(right, coords)
        except DegenerateFlip:
            skipped += 1
            continue
        checked += 1
        if a != b:
            return {"checked": checked, "skipped": skipped, "pass": False,
                    "witness": (xi, xj, xk)}
    return {"checked": checked, "skipped": skipped, "pass": True, "witness": None}


def verify_inversion_exact(samples) -> dict:
    """Exact check of the inversion relation

        omega_ij ; rho_i ; omega_ji  ==  (ij) ; rho_j ; rho_i

    on pairs (x_i, x_j); same reporting convention as the pentagon check."""
    left = [("flip", "i", "j"), ("rho", "i"), ("flip", "j", "i")]
    right = [("swap", "i", "j"), ("rho", "j"), ("rho", "i")]
    checked = skipped = 0
    for (xi, xj) in samples:
        coords = {"i": xi, "j": xj}
        try:
            a = _apply_word(left, coords)
            b = _apply_word(right, coords)
        except DegenerateFlip:
            skipped += 1
            continue
        checked += 1
        if a != b:
            return {"checked": checked, "skipped": skipped, "pass": False,
                    "witness": (xi, xj)}
    return {"checked": checked, "skipped": skipped, "pass": True, "witness": None}


class _Jet:
    """First-order jet over Gaussian rationals in n directions (exact)."""

    __slots__ = ("val", "d")

    def __init__(self, val: GaussianRational, d: tuple):
        self.val = val
        self.d = tuple(d)

    @classmethod
    def var(cls, val, n, slot):
        d = [ZERO] * n
        d[slot] = ONE
        return cls(val, d)

    @classmethod
    def const(cls, val, n):
        return cls(val, [ZERO] * n)

    def __add__(self, o):
        return _Jet(self.val + o.val, [a + b for a, b in zip(self.d, o.d)])

    def __sub__(self, o):
        return _Jet(self.val - o.val, [a - b for a, b in zip(self.d, o.d)])

    def __mul__(self, o):
        return _Jet(
            self.val * o.val,
            [self.val * db + da * o.val for da, db in zip(self.d, o.d)],
        )

    def __truediv__(self, o):
        val = self.val / o.val
        return _Jet(
            val, [(da - val * db) / o.val for da, db in zip(self.d, o.d)]
        )


def _two_form_coeffs(jets) -> dict:
    """Coefficients of dz_a ^ dz_b of sum_t dx1^dx2/(x1 x2) pulled back.

    jets: list of pairs (x1, x2) of _Jet over n base directions.  Returns a
    dict {(a, b): coeff} for a < b.
    """
    n = len(jets[0][0].d)
    out = {}
    for (x1, x2) in jets:
        inv = ONE / (x1.val * x2.val)
        for a_ in range(n):
            for b_ in range(a_ + 1, n):
                c = (x1.d[a_] * x2.d[b_] - x1.d[b_] * x2.d[a_]) * inv
                key = (a_, b_)
                out[key] = out.get(key, ZERO) + c
    return out


def form_preservation_check(samples) -> dict:
    """Exact check that the flip preserves sum dx1^dx2/(x1 x2) + dy1^dy2/(y1 y2).

    Uses first-order jets in the four input coordinates; the pulled-back
    two-form of (x.y, x*y) must equal the input form coefficient-by-
    coefficient.  Returns the same report dict as the other checks.
    """
    checked = skipped = 0
    for (x, y) in samples:
        vals = [x.x1, x.x2, y.x1, y.x2]
        jets = [_Jet.var(v, 4, i) for i, v in enumerate(vals)]
        jx = (jets[0], jets[1])
        jy = (jets[2], jets[3])
        den = jx[0] * jy[1] + jx[1]
        if den.val.is_zero:
            skipped += 1
            continue
        checked += 1
        xd = (jx[0] * jy[0], den)
        ys = (jy[0] * jx[1] / den, jy[1] / den)
        before = _two_form_coeffs([jx, jy])
        after = _two_form_coeffs([xd, ys])
        keys = set(before) | set(after)
        if any(before.get(k1, ZERO) != after.get(k1, ZERO) for k1 in keys):
            return {"checked": checked, "skipped": skipped, "pass": False,
                    "witness": (x, y)}
    return {"checked": checked, "skipped": skipped, "pass": True, "witness": None}


def corner_form_check(samples) -> dict:
    """Exact check that the corner change preserves dx1^dx2/(x1 x2)."""
    checked = 0
    for x in samples:
        jets = [_Jet.var(v, 2, i) for i, v in enumerate((x.x1, x.x2))]
        hat = (jets[1] / jets[0], _Jet.const(ONE, 2) / jets[0])
        before = _two_form_coeffs([tuple(jets)])
        after = _two_form_coeffs([hat])
        checked += 1
        if before != after:
            return {"checked": checked, "skipped": 0, "pass": False, "witness": x}
    return {"checked": checked, "skipped": 0, "pass": True, "witness": None}

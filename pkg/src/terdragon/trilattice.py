"""Exact arithmetic on the triangular lattice Z[w], w = exp(i*pi/3).

A point ``a + b*w`` is stored as the integer pair ``(a, b)``; products use
``w**2 = w - 1``.  Directions are plain ints mod 6 indexing ``UNIT``.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple

UNIT = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

E1 = "E1"
E2 = "E2"


class EPoint(NamedTuple):
    a: int
    b: int

    def __add__(self, other):  # type: ignore[override]
        return EPoint(self.a + other[0], self.b + other[1])

    def __sub__(self, other):
        return EPoint(self.a - other[0], self.b - other[1])

    def __neg__(self):
        return EPoint(-self.a, -self.b)

    def __mul__(self, other):  # type: ignore[override]
        if isinstance(other, int):
            return EPoint(self.a * other, self.b * other)
        c, d = other
        return EPoint(self.a * c - self.b * d, self.a * d + self.b * c + self.b * d)

    __rmul__ = __mul__

    def norm(self) -> int:
        """Squared Euclidean length for unit side length."""
        return norm(self)

    def conj(self) -> EPoint:
        # conj(w) = 1 - w
        return EPoint(self.a + self.b, -self.b)

    def to_xy(self) -> tuple[float, float]:
        return (self.a + 0.5 * self.b, self.b * 0.8660254037844386)


ZERO = EPoint(0, 0)
OMEGA = EPoint(0, 1)
THETA = EPoint(1, 1)          # 1 + w, norm 3, argument 30 degrees
THETA_BAR = EPoint(2, -1)     # 2 - w = conj(THETA) = THETA * u_5


def mul(p, q) -> EPoint:
    return EPoint(p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0] + p[1] * q[1])


def norm(p) -> int:
    a, b = p
    return a * a + a * b + b * b


def hexnorm(p) -> int:
    a, b = p
    return max(abs(a), abs(b), abs(a + b))


def theta_pow(n: int) -> EPoint:
    r = EPoint(1, 0)
    for _ in range(n):
        r = mul(r, THETA)
    return r


def unit(d: int) -> EPoint:
    return EPoint(*UNIT[d % 6])


def step(p, d: int) -> EPoint:
    u = UNIT[d % 6]
    return EPoint(p[0] + u[0], p[1] + u[1])


def rotate(d: int, t: int) -> int:
    return (d + t) % 6


def direction_of(p, q) -> int:
    """Direction index of the unit vector q - p."""
    return UNIT.index((q[0] - p[0], q[1] - p[1]))


def apexes(x, d: int) -> tuple[EPoint, EPoint]:
    """Left and right apex of the oriented unit side leaving ``x`` along ``d``."""
    return step(x, d + 1), step(x, d + 5)


# -- edges -----------------------------------------------------------------

class EdgeKey(NamedTuple):
    """Nonoriented unit side ``{base, base + u_axis}`` with axis in 0..2."""
    a: int
    b: int
    axis: int


def edge_key(p, d: int) -> EdgeKey:
    d %= 6
    if d < 3:
        return EdgeKey(p[0], p[1], d)
    u = UNIT[d]
    return EdgeKey(p[0] + u[0], p[1] + u[1], d - 3)


def edge_points(e: EdgeKey) -> tuple[EPoint, EPoint]:
    base = EPoint(e.a, e.b)
    return base, step(base, e.axis)


def orient_E(e: EdgeKey, field: str = E1) -> tuple[EPoint, int]:
    """Oriented segment (start, direction) carried by ``e`` in field E1 or E2.

    E1 takes the even direction indices: upward triangles run counterclockwise,
    downward ones clockwise.  E2 is its reverse.
    """
    base, tip = edge_points(e)
    d = e.axis
    even = (base, d) if d % 2 == 0 else (tip, d + 3)
    if field == E1:
        return even
    if field == E2:
        start, dd = even
        return step(start, dd), (dd + 3) % 6
    raise ValueError(f"unknown orientation field {field!r}")


def field_parity(field: str) -> int:
    return {E1: 0, E2: 1}[field]


# -- sublattices -------------------------------------------------------------

def divisible_by_theta(p) -> bool:
    # p * (2 - w) / 3 integral  <=>  a = b (mod 3)
    return (p[0] - p[1]) % 3 == 0


def div_theta(p) -> EPoint:
    a, b = p
    # p * (2 - w) = (2a + b) + (b - a) w
    q0, q1 = 2 * a + b, b - a
    if q0 % 3 or q1 % 3:
        raise ValueError(f"{tuple(p)} is not divisible by theta")
    return EPoint(q0 // 3, q1 // 3)


def theta_valuation(p, cap: int = 64) -> int:
    """Largest n <= cap with theta**n dividing p (cap for p = 0)."""
    if p[0] == 0 and p[1] == 0:
        return cap
    n = 0
    while n < cap and divisible_by_theta(p):
        p = div_theta(p)
        n += 1
    return n


def in_frame(base, level: int, z) -> bool:
    """True iff ``z - base`` lies in theta**level * Z[w]."""
    diff = (z[0] - base[0], z[1] - base[1])
    # theta**2 = 3w, so pairs of levels reduce to divisibility by 3
    while level >= 2:
        if diff[0] % 3 or diff[1] % 3:
            return False
        diff = (diff[0] // 3, diff[1] // 3)
        level -= 2
    return level == 0 or divisible_by_theta(diff)


class SublatticeFrame(NamedTuple):
    """The point set ``base + theta**level * Z[w]``."""
    base: EPoint
    level: int

    def __contains__(self, z) -> bool:
        return in_frame(self.base, self.level, z)


def frame_contains(f: SublatticeFrame, z) -> bool:
    return in_frame(f.base, f.level, z)


def w_contains(base, k: int, z) -> bool:
    """Membership in W_k = V_{k-1} minus V_k for the chain rooted at ``base``."""
    if k < 1:
        raise ValueError("W_k is defined for k >= 1")
    return in_frame(base, k - 1, z) and not in_frame(base, k, z)


# -- hexagonal windows -------------------------------------------------------

class HexWindow(NamedTuple):
    center: EPoint
    radius: int

    def __contains__(self, z) -> bool:
        return hexnorm((z[0] - self.center[0], z[1] - self.center[1])) <= self.radius

    def strictly_contains(self, z) -> bool:
        return hexnorm((z[0] - self.center[0], z[1] - self.center[1])) < self.radius

    def corners(self) -> list[EPoint]:
        return [EPoint(self.center[0] + self.radius * u[0], self.center[1] + self.radius * u[1])
                for u in UNIT]


def hex_points(w: HexWindow) -> Iterator[EPoint]:
    """Lattice points of ``w``, rows by ``b`` then ``a``."""
    k = max(w.radius, 0)
    ca, cb = w.center
    for b in range(-k, k + 1):
        for a in range(max(-k, -k - b), min(k, k - b) + 1):
            yield EPoint(ca + a, cb + b)


def hex_edges(w: HexWindow) -> Iterator[EdgeKey]:
    """Unit sides with both endpoints in ``w``."""
    for p in hex_points(w):
        for axis in range(3):
            if step(p, axis) in w:
                yield EdgeKey(p[0], p[1], axis)


def hex_ring(center, r: int) -> list[EPoint]:
    """Points at hex distance exactly ``r``, in lexicographic (a, b) order."""
    if r == 0:
        return [EPoint(*center)]
    pts = []
    ca, cb = center
    for b in range(-r, r + 1):
        for a in range(max(-r, -r - b), min(r, r - b) + 1):
            if max(abs(a), abs(b), abs(a + b)) == r:
                pts.append(EPoint(ca + a, cb + b))
    return sorted(pts)


def spiral(center, rmax: int) -> Iterator[EPoint]:
    for r in range(rmax + 1):
        yield from hex_ring(center, r)

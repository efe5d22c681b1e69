"""Integral Weierstrass equations and their changes of coordinates."""

from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class Model:
    """The equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

    No minimality is implied; WeierstrassCurve owns the minimal model.
    """

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    @classmethod
    def from_ainvs(cls, ainvs: list[int] | tuple[int, ...]) -> "Model":
        if len(ainvs) == 2:
            return cls(0, 0, 0, int(ainvs[0]), int(ainvs[1]))
        if len(ainvs) != 5:
            raise ValueError(f"expected 5 a-invariants, got {len(ainvs)}")
        return cls(*(int(a) for a in ainvs))

    @property
    def ainvs(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @cached_property
    def b_invariants(self) -> tuple[int, int, int, int]:
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def b2(self) -> int:
        return self.b_invariants[0]

    @property
    def b4(self) -> int:
        return self.b_invariants[1]

    @property
    def b6(self) -> int:
        return self.b_invariants[2]

    @property
    def b8(self) -> int:
        return self.b_invariants[3]

    @cached_property
    def c4(self) -> int:
        return self.b2 * self.b2 - 24 * self.b4

    @cached_property
    def c6(self) -> int:
        return -self.b2**3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @cached_property
    def discriminant(self) -> int:
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def rst(self, r: int, s: int, t: int) -> "Model":
        """Substitute x = x' + r, y = y' + s x' + t (u = 1)."""
        a1, a2, a3, a4, a6 = self.ainvs
        return Model(
            a1 + 2 * s,
            a2 - s * a1 + 3 * r - s * s,
            a3 + r * a1 + 2 * t,
            a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
            a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1,
        )

    def scale_down(self, u: int) -> "Model":
        """Divide a_i by u^i; every a_i must be divisible."""
        scaled = []
        for i, a in zip((1, 2, 3, 4, 6), self.ainvs, strict=True):
            q, rem = divmod(a, u**i)
            if rem:
                raise ValueError(f"a{i} = {a} is not divisible by {u}^{i}")
            scaled.append(q)
        return Model(*scaled)

    def reduced(self) -> "Model":
        """Normal form with a1, a3 in {0, 1} and a2 in {-1, 0, 1}."""
        model = self.rst(0, -(self.a1 // 2), 0)
        model = model.rst(-((model.a2 + 1) // 3), 0, 0)
        return model.rst(0, 0, -(model.a3 // 2))

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.ainvs) + "]"

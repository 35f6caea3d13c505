"""The infinite dihedral group, in normal form, with its actions.

Elements are written ``r^s t^a`` with ``s`` a reflection bit and ``a`` an
integer shift; the defining relations are ``r^2 = 1`` and ``r t r = t^-1``.
On the integers, ``t`` adds 2 and ``r`` negates, so the group is exactly the
parity-preserving isometries of the line.  The matching actions on
sequences, on extended-integer points, and on tagged points are below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sequences import MINUS_INF, PLUS_INF, BiSeq, ZInf, fin

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class ParityPoint:
    """An integer with a copy bit; the parity tag is read off ``n``."""

    n: int
    i: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise ValueError(f"n must be an integer, got {self.n!r}")
        if self.i not in (0, 1):
            raise ValueError(f"copy bit must be 0 or 1, got {self.i!r}")

    @property
    def parity(self) -> str:
        return EVEN if self.n % 2 == 0 else ODD

    def __str__(self) -> str:
        return f"({self.n}, {self.i})"


@dataclass(frozen=True)
class DihedralElt:
    """Group element ``r^reflect t^shift`` with ``reflect`` in {0, 1}."""

    reflect: int
    shift: int

    def __post_init__(self):
        if self.reflect not in (0, 1):
            raise ValueError(f"reflect must be 0 or 1, got {self.reflect!r}")
        if isinstance(self.shift, bool) or not isinstance(self.shift, int):
            raise ValueError(f"shift must be an integer, got {self.shift!r}")

    def __mul__(self, other: "DihedralElt") -> "DihedralElt":
        # t^a r = r t^-a, so r^s1 t^a1 . r^s2 t^a2 = r^(s1 xor s2) t^(a2 + (-1)^s2 a1)
        if not isinstance(other, DihedralElt):
            return NotImplemented
        a1 = -self.shift if other.reflect else self.shift
        return DihedralElt(self.reflect ^ other.reflect, other.shift + a1)

    def inverse(self) -> "DihedralElt":
        # reflections are involutions; pure translations invert the shift
        return DihedralElt(self.reflect, self.shift if self.reflect else -self.shift)

    @classmethod
    def from_word(cls, word: str) -> "DihedralElt":
        """Fold a word over t, T (= t inverse), r into normal form.

        The word reads left to right as a composition applied right to left
        to points, matching ``*``.  Whitespace is ignored.
        """
        acc = IDENTITY
        for pos, ch in enumerate(word):
            if ch.isspace():
                continue
            if ch == "t":
                acc = acc * T
            elif ch == "T":
                acc = acc * T.inverse()
            elif ch == "r":
                acc = acc * R
            else:
                raise ValueError(f"bad generator {ch!r} at position {pos}: expected t, T, or r")
        return acc

    def __str__(self) -> str:
        return f"r^{self.reflect} t^{self.shift}"

    def act_int(self, n: int) -> int:
        """Action on the integers: ``t`` adds 2, ``r`` negates."""
        v = n + 2 * self.shift
        return -v if self.reflect else v

    def act_seq(self, chi: BiSeq) -> BiSeq:
        """Action on sequences: (t.chi)(n) = chi(n-2), (r.chi)(n) = 1 - chi(-n)."""
        shifted = BiSeq(chi.left, chi.start + 2 * self.shift, chi.core, chi.right)
        if not self.reflect:
            return shifted
        core = tuple(1 - b for b in reversed(shifted.core))
        return BiSeq(1 - shifted.right, 1 - shifted.start - len(core), core, 1 - shifted.left)

    def act_zinf(self, p: ZInf) -> ZInf:
        """Action on extended-integer points, matching act_seq through embed."""
        if not p.is_finite:
            if self.reflect:
                return PLUS_INF if p.kind < 0 else MINUS_INF
            return p
        n = p.threshold + 2 * self.shift
        return fin(1 - n) if self.reflect else fin(n)

    def act_point(self, p: ParityPoint) -> ParityPoint:
        """Action on tagged points: move the integer, keep the copy bit."""
        return ParityPoint(self.act_int(p.n), p.i)


IDENTITY = DihedralElt(0, 0)
T = DihedralElt(0, 1)
R = DihedralElt(1, 0)

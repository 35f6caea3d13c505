"""Two-sided binary sequences with eventually constant tails.

A ``BiSeq`` is a function from the integers to bits that equals ``left``
strictly below ``start``, runs through a finite ``core`` block, and equals
``right`` from ``start + len(core)`` on.  This fragment is closed under
everything done to sequences here -- shifts, reflect-complement, finitely
many bit flips -- and keeps equality, monotonicity, classification, and
window agreement decidable.

Decreasing sequences are classified by ``ZInf``: the constant sequences are
the two infinities, and the step with ones strictly below ``n`` is the
finite point ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass


def _check_bit(value, what: str = "bit") -> int:
    if value is not True and value is not False and value not in (0, 1):
        raise ValueError(f"{what} must be 0 or 1, got {value!r}")
    return int(value)


def _check_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class ZInf:
    """A point of the extended integer line: ``-inf``, a finite ``n``, or ``+inf``.

    Each point names a decreasing sequence: ``fin(n)`` is 1 strictly below
    ``n`` and 0 from ``n`` on, and the infinities name the two constants.
    ``kind`` is -1, 0, or +1; ``n`` is meaningful only when ``kind`` is 0.
    """

    kind: int
    n: int = 0

    def __post_init__(self):
        if self.kind not in (-1, 0, 1):
            raise ValueError(f"kind must be -1, 0, or 1, got {self.kind!r}")
        _check_int(self.n, "n")
        if self.kind != 0 and self.n != 0:
            raise ValueError("infinite points carry no threshold")

    @property
    def is_finite(self) -> bool:
        return self.kind == 0

    @property
    def threshold(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} has no threshold")
        return self.n

    def to_json(self):
        if self.kind < 0:
            return "-inf"
        if self.kind > 0:
            return "+inf"
        return self.n

    @classmethod
    def from_json(cls, obj) -> "ZInf":
        if obj == "-inf":
            return MINUS_INF
        if obj == "+inf":
            return PLUS_INF
        return fin(_check_int(obj, "point"))

    def __str__(self) -> str:
        if self.kind < 0:
            return "-inf"
        if self.kind > 0:
            return "+inf"
        return f"nbar:{self.n}"


MINUS_INF = ZInf(-1)
PLUS_INF = ZInf(1)


def fin(n: int) -> ZInf:
    """The finite point with threshold ``n``."""
    return ZInf(0, n)


def parse_zinf(text: str) -> ZInf:
    """Parse ``-inf``, ``+inf``, ``nbar:K``, or a bare integer."""
    text = text.strip()
    if text == "-inf":
        return MINUS_INF
    if text in ("+inf", "inf"):
        return PLUS_INF
    if text.startswith("nbar:"):
        text = text[len("nbar:"):]
    try:
        return fin(int(text))
    except ValueError:
        raise ValueError(
            f"cannot parse {text!r} as a point: expected -inf, +inf, nbar:K, or an integer"
        ) from None


@dataclass(frozen=True)
class BiSeq:
    """An eventually constant two-sided binary sequence, in canonical form.

    The constructor trims core entries that merely repeat the adjacent tail
    value and pins ``start`` to 0 for constants, so structural equality is
    extensional equality.
    """

    left: int
    start: int
    core: tuple = ()
    right: int = 0

    def __post_init__(self):
        left = _check_bit(self.left, "left")
        right = _check_bit(self.right, "right")
        start = _check_int(self.start, "start")
        core = tuple(_check_bit(b, "core entry") for b in self.core)
        i, j = 0, len(core)
        while i < j and core[i] == left:
            i += 1
        while j > i and core[j - 1] == right:
            j -= 1
        start += i
        core = core[i:j]
        if not core and left == right:
            start = 0
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "core", core)

    @property
    def end(self) -> int:
        """First index of the right tail."""
        return self.start + len(self.core)

    def at(self, n: int) -> int:
        """The bit at index ``n``."""
        if n < self.start:
            return self.left
        if n < self.end:
            return self.core[n - self.start]
        return self.right

    def first_increase(self) -> int | None:
        """Least ``n`` with ``at(n) < at(n+1)``, or None if decreasing."""
        for n in range(self.start - 1, self.end + 1):
            if self.at(n) < self.at(n + 1):
                return n
        return None

    def is_decreasing(self) -> bool:
        return self.first_increase() is None

    def classify(self) -> ZInf:
        """The extended-integer point this sequence is, if it is decreasing.

        The constants map to the infinities and the downward step at ``n``
        maps to the finite point ``n``.  Raises ValueError, naming the first
        rising index, when the sequence is not decreasing.
        """
        n = self.first_increase()
        if n is not None:
            raise ValueError(f"sequence is not decreasing: rises between indices {n} and {n + 1}")
        if not self.core and self.left == self.right:
            return MINUS_INF if self.left == 0 else PLUS_INF
        # a canonical decreasing non-constant sequence is a bare 1|0 step
        return fin(self.start)

    def agrees_within(self, other: "BiSeq", radius: int) -> bool:
        """Whether the two sequences are equal at every index ``|m| < radius``."""
        lo, hi = -radius + 1, radius - 1
        if lo > hi:
            return True
        inner_lo = min(self.start, other.start)
        inner_hi = max(self.end, other.end) - 1
        if lo < inner_lo and self.left != other.left:
            return False
        if hi > inner_hi and self.right != other.right:
            return False
        for m in range(max(lo, inner_lo), min(hi, inner_hi) + 1):
            if self.at(m) != other.at(m):
                return False
        return True

    def flip_at(self, n: int) -> "BiSeq":
        """A copy with the bit at index ``n`` flipped."""
        lo = min(self.start, n)
        hi = max(self.end - 1, n)
        bits = [self.at(m) for m in range(lo, hi + 1)]
        bits[n - lo] ^= 1
        return BiSeq(self.left, lo, tuple(bits), self.right)

    @classmethod
    def constant(cls, bit: int) -> "BiSeq":
        return cls(bit, 0, (), bit)

    def to_json(self) -> dict:
        return {
            "left": self.left,
            "start": self.start,
            "core": list(self.core),
            "right": self.right,
        }

    @classmethod
    def from_json(cls, obj) -> "BiSeq":
        if not isinstance(obj, dict):
            raise ValueError(f"sequence must be an object, got {type(obj).__name__}")
        extra = set(obj) - {"left", "start", "core", "right"}
        if extra:
            raise ValueError(f"unknown sequence fields: {sorted(extra)}")
        missing = {"left", "start", "core", "right"} - set(obj)
        if missing:
            raise ValueError(f"missing sequence fields: {sorted(missing)}")
        if not isinstance(obj["core"], (list, tuple)):
            raise ValueError("core must be an array of bits")
        return cls(obj["left"], obj["start"], tuple(obj["core"]), obj["right"])


def embed(p: ZInf) -> BiSeq:
    """The decreasing sequence a point stands for."""
    if p.kind < 0:
        return BiSeq(0, 0, (), 0)
    if p.kind > 0:
        return BiSeq(1, 0, (), 1)
    return BiSeq(1, p.n, (), 0)

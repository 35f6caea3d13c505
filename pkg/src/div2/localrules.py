"""Local displacement rules, and the machinery that rules them all out.

A candidate family ``phi_chi(n) = n + offset(window)`` reads a radius-``w``
window of the decreasing parameter ``chi`` around ``n`` and displaces ``n``
by a tabled odd amount bounded by ``d``.  Such a family is translation
equivariant and continuous by construction, so only two questions remain:
whether it commutes with the reflection, and whether it is a bijection from
the evens onto the odds for every parameter.

Reflection equivariance is a finite condition on the table (the offset at a
window's reflect-complement must be the negated offset).  Any rule passing
it is eventually linear with slope one: beyond an explicit even bound ``N``
the zero-threshold family is ``n + k`` on the right and ``n - k`` on the
left.  Counting the even block ``[-N, N]`` (odd cardinality) against the odd
block ``[-N - k, N + k]`` it must fill (even cardinality) then contradicts
bijectivity, so every rule fails at some threshold parameter.  The
exhaustive search below confirms that concretely, with a collision or gap
witness per rule, for every table within the guarded size limits.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .dihedral import R, DihedralElt
from .sequences import MINUS_INF, PLUS_INF, ZInf, fin


@dataclass(frozen=True)
class WindowPattern:
    """A decreasing bit vector on ``[-w, w]``: ones strictly below ``cut``.

    ``cut`` ranges over ``[-w, w + 1]``; the extremes are the all-zero and
    all-one windows.  There are ``2w + 2`` patterns of radius ``w``.
    """

    w: int
    cut: int

    def __post_init__(self):
        if not isinstance(self.w, int) or isinstance(self.w, bool) or self.w < 0:
            raise ValueError(f"radius must be a non-negative integer, got {self.w!r}")
        if not isinstance(self.cut, int) or isinstance(self.cut, bool):
            raise ValueError(f"cut must be an integer, got {self.cut!r}")
        if not -self.w <= self.cut <= self.w + 1:
            raise ValueError(f"cut {self.cut} out of range [{-self.w}, {self.w + 1}]")

    @property
    def is_all_zero(self) -> bool:
        return self.cut == -self.w

    @property
    def is_all_one(self) -> bool:
        return self.cut == self.w + 1

    def bits(self) -> tuple:
        return tuple(1 if j < self.cut else 0 for j in range(-self.w, self.w + 1))

    def reflect_complement(self) -> "WindowPattern":
        """The window seen at ``-n`` by the reflected parameter; an involution."""
        return WindowPattern(self.w, 1 - self.cut)

    def name(self) -> str:
        if self.is_all_zero:
            return "allzero"
        if self.is_all_one:
            return "allone"
        return f"cut:{self.cut}"

    @classmethod
    def parse(cls, w: int, name: str) -> "WindowPattern":
        if name == "allzero":
            return cls(w, -w)
        if name == "allone":
            return cls(w, w + 1)
        if isinstance(name, str) and name.startswith("cut:"):
            try:
                return cls(w, int(name[len("cut:"):]))
            except ValueError as exc:
                raise ValueError(f"bad pattern name {name!r}: {exc}") from None
        raise ValueError(f"bad pattern name {name!r}: expected allzero, allone, or cut:P")

    @classmethod
    def from_bits(cls, bits) -> "WindowPattern":
        bits = tuple(bits)
        if len(bits) % 2 == 0 or not bits:
            raise ValueError(f"window must have odd length 2w + 1, got {len(bits)} bits")
        w = len(bits) // 2
        cut = -w
        while cut - (-w) < len(bits) and bits[cut + w] == 1:
            cut += 1
        pattern = cls(w, cut)
        if pattern.bits() != bits:
            raise ValueError(f"window {bits!r} is not decreasing")
        return pattern

    @classmethod
    def from_zinf(cls, w: int, chi: ZInf, center: int) -> "WindowPattern":
        """The window of the decreasing parameter ``chi`` around ``center``."""
        if chi.kind < 0:
            return cls(w, -w)
        if chi.kind > 0:
            return cls(w, w + 1)
        return cls(w, max(-w, min(w + 1, chi.threshold - center)))


def all_patterns(w: int) -> tuple:
    """The ``2w + 2`` radius-``w`` patterns, in cut order."""
    return tuple(WindowPattern(w, cut) for cut in range(-w, w + 2))


@dataclass(frozen=True)
class LocalRule:
    """A total table from radius-``w`` windows to odd displacements bounded by ``d``.

    ``offsets[cut + w]`` is the displacement tabled for the pattern with that
    cut.  The induced family is ``phi_chi(n) = n + offsets[...]`` with the
    window of ``chi`` read around the even integer ``n``.
    """

    w: int
    d: int
    offsets: tuple

    def __post_init__(self):
        if not isinstance(self.w, int) or isinstance(self.w, bool) or not 0 <= self.w:
            raise ValueError(f"radius must be a non-negative integer, got {self.w!r}")
        if not isinstance(self.d, int) or isinstance(self.d, bool) or self.d < 1:
            raise ValueError(f"displacement bound must be a positive integer, got {self.d!r}")
        offsets = tuple(self.offsets)
        if len(offsets) != 2 * self.w + 2:
            raise ValueError(
                f"table must cover all {2 * self.w + 2} patterns, got {len(offsets)} entries"
            )
        for pos, off in enumerate(offsets):
            if not isinstance(off, int) or isinstance(off, bool):
                raise ValueError(f"offset for cut {pos - self.w} must be an integer, got {off!r}")
            if off % 2 == 0:
                raise ValueError(f"offset for cut {pos - self.w} must be odd, got {off}")
            if abs(off) > self.d:
                raise ValueError(f"offset {off} for cut {pos - self.w} exceeds bound {self.d}")
        object.__setattr__(self, "offsets", offsets)

    def offset(self, pattern: WindowPattern) -> int:
        if pattern.w != self.w:
            raise ValueError(f"pattern radius {pattern.w} does not match rule radius {self.w}")
        return self.offsets[pattern.cut + self.w]

    def apply(self, chi: ZInf, n: int) -> int:
        """The family value at even ``n`` with decreasing parameter ``chi``."""
        if n % 2 != 0:
            raise ValueError(f"the family is defined on even integers, got {n}")
        return n + self.offset(WindowPattern.from_zinf(self.w, chi, n))

    def table(self) -> dict:
        return {pat: self.offsets[pat.cut + self.w] for pat in all_patterns(self.w)}

    @classmethod
    def from_table(cls, w: int, table, d: int | None = None) -> "LocalRule":
        entries: dict = {}
        for key, off in dict(table).items():
            if isinstance(key, WindowPattern):
                pat = key
                if pat.w != w:
                    raise ValueError(f"pattern radius {pat.w} does not match rule radius {w}")
            elif isinstance(key, str):
                pat = WindowPattern.parse(w, key)
            elif isinstance(key, int) and not isinstance(key, bool):
                pat = WindowPattern(w, key)
            else:
                raise ValueError(f"bad table key {key!r}")
            if pat.cut in entries:
                raise ValueError(f"pattern {pat.name()} tabled twice")
            entries[pat.cut] = off
        missing = [pat.name() for pat in all_patterns(w) if pat.cut not in entries]
        if missing:
            raise ValueError(f"table is missing patterns: {missing}")
        offsets = tuple(entries[cut] for cut in range(-w, w + 2))
        if d is None:
            d = max(abs(off) for off in offsets)
        return cls(w, d, offsets)

    def to_json(self) -> dict:
        return {
            "w": self.w,
            "d": self.d,
            "table": {pat.name(): off for pat, off in self.table().items()},
        }

    @classmethod
    def from_json(cls, obj) -> "LocalRule":
        if not isinstance(obj, dict):
            raise ValueError(f"rule must be an object, got {type(obj).__name__}")
        extra = set(obj) - {"w", "d", "table"}
        if extra:
            raise ValueError(f"unknown rule fields: {sorted(extra)}")
        if "w" not in obj or "table" not in obj:
            raise ValueError("rule needs fields w and table")
        if not isinstance(obj["table"], dict):
            raise ValueError("table must be an object mapping pattern names to offsets")
        return cls.from_table(obj["w"], obj["table"], obj.get("d"))


def r_equivariance_witness(rule: LocalRule) -> WindowPattern | None:
    """First pattern violating reflection equivariance, or None if none does.

    The induced family commutes with the reflection exactly when each
    pattern's reflect-complement is tabled with the negated offset.
    """
    for pat in all_patterns(rule.w):
        if rule.offset(pat.reflect_complement()) != -rule.offset(pat):
            return pat
    return None


class NotReflectionEquivariant(ValueError):
    """Raised when an operation requires reflection equivariance and lacks it."""

    def __init__(self, pattern: WindowPattern):
        self.pattern = pattern
        super().__init__(
            f"rule is not reflection equivariant: offset at {pattern.reflect_complement().name()} "
            f"is not the negation of the offset at {pattern.name()}"
        )


@dataclass(frozen=True)
class NaiveWitness:
    """A concrete equivariance failure for a constant-shift family."""

    g: DihedralElt
    chi: ZInf
    n: int
    lhs: int
    rhs: int


def naive_family_witness(delta: int = 1, chi: ZInf = fin(0), n: int = 0) -> NaiveWitness:
    """Where the family ``f(n) = n + delta`` fails to commute with the reflection.

    The left side is the family evaluated after acting, the right side is
    the action applied to the family's value; for the reflection they differ
    by ``2 * delta`` at every ``n``, so any point witnesses.
    """
    if delta % 2 == 0:
        raise ValueError(f"the shift must be odd to map evens to odds, got {delta}")
    if n % 2 != 0:
        raise ValueError(f"witness point must be even, got {n}")
    lhs = R.act_int(n) + delta
    rhs = R.act_int(n + delta)
    assert lhs != rhs
    return NaiveWitness(R, chi, n, lhs, rhs)


@dataclass(frozen=True)
class LinearTail:
    """Tail certificate: displacement ``k`` and an even bound ``N``.

    Beyond ``N`` the zero-threshold family is ``n + k`` on the right and
    ``n - k`` on the left.  ``k`` is odd, ``N`` is even and exceeds ``|k|``.
    """

    k: int
    N: int

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k % 2 == 0:
            raise ValueError(f"tail displacement must be an odd integer, got {self.k!r}")
        if not isinstance(self.N, int) or isinstance(self.N, bool) or self.N % 2 != 0:
            raise ValueError(f"tail bound must be an even integer, got {self.N!r}")
        if self.N <= abs(self.k):
            raise ValueError(f"tail bound {self.N} must exceed |k| = {abs(self.k)}")


@dataclass(frozen=True)
class TailViolation:
    """A point where the claimed linear tail fails."""

    n: int
    expected: int
    actual: int


def eventually_linear(rule: LocalRule):
    """Extract and verify the linear-tail certificate of an equivariant rule.

    Returns a LinearTail with ``k`` the all-zero offset and ``N`` the least
    even integer above ``max(w, |k|)``, after checking the zero-threshold
    family exactly on the even windows ``(N, N + 2w + 4]`` and
    ``[-N - 2w - 4, -N)``; a failure comes back as a TailViolation.  Raises
    NotReflectionEquivariant for rules outside its hypothesis.
    """
    bad = r_equivariance_witness(rule)
    if bad is not None:
        raise NotReflectionEquivariant(bad)
    k = rule.apply(MINUS_INF, 0)
    bound = max(rule.w, abs(k))
    N = bound + 1 if (bound + 1) % 2 == 0 else bound + 2
    zero = fin(0)
    for n in range(N + 2, N + 2 * rule.w + 5, 2):
        actual = rule.apply(zero, n)
        if actual != n + k:
            return TailViolation(n, n + k, actual)
    for n in range(-N - 2 * rule.w - 4, -N, 2):
        actual = rule.apply(zero, n)
        if actual != n - k:
            return TailViolation(n, n - k, actual)
    return LinearTail(k, N)


def parity_counts(tail: LinearTail) -> tuple:
    """Sizes of the central even block and the odd block its image must fill.

    Counts the evens in ``[-N, N]`` and the odds in ``[-N - k, N + k]`` by
    enumeration.  The first is always odd and the second always even, which
    is the contradiction: a bijection cannot map the block onto its forced
    image.
    """
    evens = [n for n in range(-tail.N, tail.N + 1) if n % 2 == 0]
    odds = [v for v in range(-tail.N - tail.k, tail.N + tail.k + 1) if v % 2 != 0]
    return (len(evens), len(odds))


@dataclass(frozen=True)
class Collision:
    """Two even points sent to the same value at parameter ``chi``."""

    chi: ZInf
    n1: int
    n2: int
    value: int


@dataclass(frozen=True)
class Gap:
    """An odd value missed by the family at parameter ``chi``."""

    chi: ZInf
    value: int


def threshold_probes(w: int, d: int) -> list:
    """The canonical parameter probes: both infinities, then thresholds by size."""
    span = w + d + 2
    finite = sorted(range(-span, span + 1), key=lambda m: (abs(m), m))
    return [MINUS_INF, PLUS_INF] + [fin(m) for m in finite]


def bijectivity_witness(rule: LocalRule, pad: int = 0):
    """First collision or gap of the family over the canonical probes, or None.

    At a threshold ``m`` the family is a rigid shift outside the window
    ``|n - m| <= w``, so colliding pairs lie within ``w + 2d + 4`` of ``m``
    (two displacements differ by at most ``2d``) and uncovered odd values
    within ``w + d + 2`` (beyond that the matching tail covers).  Scanning
    those finite windows therefore decides bijectivity exactly; ``pad``
    widens both scans, which must never change the verdict.  Probes are
    visited in canonical order and the first failure is returned, so the
    witness is deterministic.  Raises NotReflectionEquivariant for rules
    outside the hypothesis.
    """
    bad = r_equivariance_witness(rule)
    if bad is not None:
        raise NotReflectionEquivariant(bad)
    if pad < 0:
        raise ValueError(f"pad must be non-negative, got {pad}")
    for chi in threshold_probes(rule.w, rule.d):
        if not chi.is_finite:
            # constant parameter: every window is the same pattern and the
            # family is the bijection n -> n + const
            continue
        m = chi.threshold
        reach = rule.w + 2 * rule.d + 4 + pad
        lo = m - reach if (m - reach) % 2 == 0 else m - reach + 1
        images: dict = {}
        for n in range(lo, m + reach + 1, 2):
            v = rule.apply(chi, n)
            if v in images:
                return Collision(chi, images[v], n, v)
            images[v] = n
        span = rule.w + rule.d + 2 + pad
        vlo = m - span if (m - span) % 2 != 0 else m - span + 1
        for v in range(vlo, m + span + 1, 2):
            if v not in images:
                return Gap(chi, v)
    return None


def _odd_offsets(d: int) -> tuple:
    return tuple(k for k in range(-d, d + 1) if k % 2 != 0)


def equivariant_rules(w: int, d: int, first: int | None = None):
    """All reflection-equivariant rules of radius ``w``, bound ``d``, lexicographically.

    The equivariance condition pairs each cut ``c`` with ``1 - c`` and forces
    negated offsets, so the free choices sit exactly on cuts ``-w .. 0``.
    Enumerating those ascending by offset yields the same order as filtering
    the full table space lexicographically.  Passing ``first`` fixes the
    offset at cut ``-w`` (used to slice the search).
    """
    offs = _odd_offsets(d)
    free = list(range(-w, 1))
    heads = (first,) if first is not None else offs
    for head in heads:
        if head not in offs:
            raise ValueError(f"bad slice offset {head!r}")
        for rest in itertools.product(offs, repeat=len(free) - 1):
            table = {}
            for cut, off in zip(free, (head,) + rest):
                table[cut] = off
                table[1 - cut] = -off
            yield LocalRule(w, d, tuple(table[c] for c in range(-w, w + 2)))


def iterate_verdicts(w: int, d: int, first: int | None = None):
    """Yield ``(rule, witness)`` over the equivariant rules; witness None means survivor."""
    for rule in equivariant_rules(w, d, first=first):
        if r_equivariance_witness(rule) is not None:
            continue
        yield rule, bijectivity_witness(rule)


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an exhaustive scan of one ``(w, d)`` rule space."""

    w: int
    d: int
    candidates: int
    equivariant: int
    failed_collision: int
    failed_gap: int
    survivors: tuple

    def to_json(self) -> dict:
        return {
            "w": self.w,
            "d": self.d,
            "candidates": self.candidates,
            "equivariant": self.equivariant,
            "failed_collision": self.failed_collision,
            "failed_gap": self.failed_gap,
            "survivors": [rule.to_json() for rule in self.survivors],
        }


MAX_SEARCH_W = 4
MAX_SEARCH_D = 9


def _slice_counts(args) -> tuple:
    w, d, head = args
    equivariant = collisions = gaps = 0
    survivors = []
    for rule, witness in iterate_verdicts(w, d, first=head):
        equivariant += 1
        if witness is None:
            survivors.append(rule)
        elif isinstance(witness, Collision):
            collisions += 1
        else:
            gaps += 1
    return equivariant, collisions, gaps, survivors


def exhaustive_search(w: int, d: int, jobs: int = 1) -> SearchReport:
    """Scan every rule of radius ``w`` with displacements bounded by ``d``.

    The full table space has ``(#odd offsets)^(2w + 2)`` candidates; it is
    counted in closed form and only its reflection-equivariant subspace is
    materialized, which loses nothing because every rule outside it fails
    the finite table condition the subspace is defined by.  Each surviving
    candidate is then put through the exact bijectivity decision.  With
    ``jobs > 1`` the space is split by the offset tabled at the lowest cut
    and scanned in worker processes; the merged report is identical to the
    single-process one.
    """
    if not 0 <= w <= MAX_SEARCH_W:
        raise ValueError(f"radius must be in [0, {MAX_SEARCH_W}] for the exhaustive search, got {w}")
    if not 1 <= d <= MAX_SEARCH_D:
        raise ValueError(f"bound must be in [1, {MAX_SEARCH_D}] for the exhaustive search, got {d}")
    if not isinstance(jobs, int) or isinstance(jobs, bool) or jobs < 1:
        raise ValueError(f"jobs must be a positive integer, got {jobs!r}")
    offs = _odd_offsets(d)
    candidates = len(offs) ** (2 * w + 2)
    slices = [(w, d, head) for head in offs]
    if jobs == 1:
        parts = [_slice_counts(s) for s in slices]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(slices))) as pool:
            parts = list(pool.map(_slice_counts, slices))
    equivariant = sum(p[0] for p in parts)
    collisions = sum(p[1] for p in parts)
    gaps = sum(p[2] for p in parts)
    survivors = sorted((r for p in parts for r in p[3]), key=lambda r: r.offsets)
    return SearchReport(w, d, candidates, equivariant, collisions, gaps, tuple(survivors))

"""Sign vectors over an ordered ground set.

A sign vector is stored as a tuple of ints in {-1, 0, 1}.  The ground set is
carried by the containing object (a covector set, an oriented matroid), so two
vectors are compatible when their lengths agree.

>>> x = SignVector.parse("+0-")
>>> y = SignVector.parse("0-+")
>>> str(x.compose(y))
'+--'
>>> sorted(separation(SignVector.parse("+-0"), SignVector.parse("--+")))
[0]
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Union

PLUS, MINUS, ZERO = 1, -1, 0

_CHAR = {1: "+", -1: "-", 0: "0"}
_SIGN = {"+": 1, "-": -1, "0": 0, "−": -1}


def sign(value) -> int:
    return (value > 0) - (value < 0)


class SignVector(tuple):
    """Immutable sign vector; equality and hashing are those of the tuple."""

    __slots__ = ()

    def __new__(cls, signs: Iterable[int] = ()):
        return super().__new__(cls, signs)

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        try:
            return cls(_SIGN[c] for c in text)
        except KeyError as exc:
            raise ValueError(f"bad sign character {exc.args[0]!r} in {text!r}") from None

    @classmethod
    def zero(cls, m: int) -> "SignVector":
        return cls((0,) * m)

    def __str__(self) -> str:
        return "".join(_CHAR[s] for s in self)

    def __repr__(self) -> str:
        return f"SignVector({str(self)!r})"

    def __neg__(self) -> "SignVector":
        return SignVector(-s for s in self)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, s in enumerate(self) if s)

    @property
    def zero_set(self) -> frozenset[int]:
        return frozenset(i for i, s in enumerate(self) if not s)

    def compose(self, other: Sequence[int]) -> "SignVector":
        return compose(self, other)

    def opposite(self) -> "SignVector":
        return -self


def _check(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise ValueError(f"ground-set mismatch: {len(x)} vs {len(y)} elements")


def compose(x: Sequence[int], y: Sequence[int]) -> SignVector:
    _check(x, y)
    return SignVector(a if a else b for a, b in zip(x, y))


def separation(x: Sequence[int], y: Sequence[int]) -> frozenset[int]:
    _check(x, y)
    return frozenset(i for i, (a, b) in enumerate(zip(x, y)) if a * b < 0)


def orthogonal(x: Sequence[int], y: Sequence[int]) -> bool:
    _check(x, y)
    same = opposite_seen = False
    for a, b in zip(x, y):
        p = a * b
        if p > 0:
            same = True
        elif p < 0:
            opposite_seen = True
    # disjoint supports give (False, False)
    return same == opposite_seen


def opposite(x: Sequence[int]) -> SignVector:
    return SignVector(-s for s in x)


def reorient(x: Sequence[int], positions: Iterable[int]) -> SignVector:
    flip = set(positions)
    if any(not 0 <= i < len(x) for i in flip):
        raise ValueError("reorientation set is not a subset of the ground set")
    return SignVector(-s if i in flip else s for i, s in enumerate(x))


def restrict(x: Sequence[int], positions: Iterable[int]) -> SignVector:
    keep = sorted(set(positions))
    if any(not 0 <= i < len(x) for i in keep):
        raise ValueError("restriction set is not a subset of the ground set")
    return SignVector(x[i] for i in keep)


def support(x: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, s in enumerate(x) if s)


def conforms_to(x: Sequence[int], t: Sequence[int]) -> bool:
    """True iff x o t == t."""
    _check(x, t)
    return all(a == 0 or a == b for a, b in zip(x, t))


def cover_le(x: Sequence[int], y: Sequence[int]) -> bool:
    """Componentwise order with 0 below both signs."""
    return conforms_to(x, y)


# --------------------------------------------------------------------------
# ground sets

@dataclass(frozen=True, order=True)
class Point:
    i: int

    def __str__(self) -> str:
        return f"p:{self.i}"


@dataclass(frozen=True, order=True)
class Pair:
    i: int
    j: int

    def __post_init__(self):
        if not self.i < self.j:
            raise ValueError(f"pair ({self.i},{self.j}) must satisfy i < j")

    def __str__(self) -> str:
        return f"e:{self.i},{self.j}"


Label = Union[Point, Pair, str]


def parse_label(text: str) -> Label:
    if text.startswith("p:"):
        return Point(int(text[2:]))
    if text.startswith("e:"):
        i, j = text[2:].split(",")
        return Pair(int(i), int(j))
    return text


def pairs(n: int) -> list[Pair]:
    return [Pair(i, j) for i, j in combinations(range(1, n + 1), 2)]


class GroundSet(tuple):
    """Ordered tuple of distinct labels."""

    __slots__ = ()

    def __new__(cls, labels: Iterable[Label] = ()):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("ground-set labels must be distinct")
        return super().__new__(cls, labels)

    @classmethod
    def points(cls, n: int) -> "GroundSet":
        return cls(Point(i) for i in range(1, n + 1))

    @classmethod
    def pairs(cls, n: int) -> "GroundSet":
        return cls(pairs(n))

    @classmethod
    def points_and_pairs(cls, n: int) -> "GroundSet":
        return cls([*(Point(i) for i in range(1, n + 1)), *pairs(n)])

    def index(self, label) -> int:  # type: ignore[override]
        try:
            return super().index(label)
        except ValueError:
            raise ValueError(f"{label} is not in the ground set") from None

    def indices(self, labels: Iterable[Label]) -> list[int]:
        return [self.index(lab) for lab in labels]

    @property
    def point_labels(self) -> list[Point]:
        return [lab for lab in self if isinstance(lab, Point)]

    @property
    def pair_labels(self) -> list[Pair]:
        return [lab for lab in self if isinstance(lab, Pair)]

    def pairs_n(self) -> int:
        """n such that the ground set is exactly Pairs(n), else raise."""
        m = len(self)
        n = 1
        while n * (n - 1) // 2 < m:
            n += 1
        if tuple(self) != tuple(pairs(n)):
            if m == 0:
                return 1
            raise ValueError("ground set is not of the form Pairs(n)")
        return n

    def to_json(self):
        m = len(self)
        for n in range(0, m + 2):
            if tuple(self) == tuple(GroundSet.points(n)):
                return {"points": n, "pairs": False}
            if n and tuple(self) == tuple(GroundSet.points_and_pairs(n)):
                return {"points": n, "pairs": True}
            if n and m and tuple(self) == tuple(pairs(n)):
                return {"pairs": n}
        return {"labels": [str(lab) for lab in self]}

    @classmethod
    def from_json(cls, obj) -> "GroundSet":
        if "labels" in obj:
            return cls(parse_label(str(s)) for s in obj["labels"])
        if "points" in obj:
            n = int(obj["points"])
            return cls.points_and_pairs(n) if obj.get("pairs") else cls.points(n)
        if "pairs" in obj:
            return cls.pairs(int(obj["pairs"]))
        raise ValueError(f"unrecognised ground-set object {obj!r}")

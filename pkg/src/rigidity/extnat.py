"""Natural numbers extended by a single infinite value.

Degrees of rigidity take values in N ∪ {INF}; indexes and profile counts take
values in ω+1.  Both are modelled by plain ``int`` plus the singleton ``INF``
(aliased as ``OMEGA``).  ``INF`` compares greater than every integer, absorbs
addition, and follows cardinal arithmetic for products (``0 * INF == 0``).
"""

from __future__ import annotations

from typing import Union


class _Infinity:
    __slots__ = ()
    _instance: "_Infinity | None" = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self) -> int:
        return hash("rigidity.INF")

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __le__(self, other) -> bool:
        if other is self:
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other) -> bool:
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other) -> bool:
        if other is self or isinstance(other, int):
            return True
        return NotImplemented

    def __add__(self, other):
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        return NotImplemented

    def __mul__(self, other):
        if other is self:
            return self
        if isinstance(other, int):
            return 0 if other == 0 else self
        return NotImplemented

    __rmul__ = __mul__


INF = _Infinity()
OMEGA = INF

ExtNat = Union[int, _Infinity]


def is_finite(x: ExtNat) -> bool:
    return x is not INF


def pos_pred(x: ExtNat) -> ExtNat:
    """Truncated predecessor ``max(x - 1, 0)``; ``INF`` stays ``INF``."""
    if x is INF:
        return INF
    return max(x - 1, 0)


def to_json(x: ExtNat, inf_token: str = "inf"):
    return inf_token if x is INF else x


def from_json(value) -> ExtNat:
    if isinstance(value, str):
        if value.lower() in ("inf", "omega", "infinity", "∞", "ω"):
            return INF
        raise ValueError(f"not an extended natural: {value!r}")
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"not an extended natural: {value!r}")
    return value


def parse(text: str) -> ExtNat:
    text = text.strip()
    if text.isdigit():
        return int(text)
    return from_json(text)

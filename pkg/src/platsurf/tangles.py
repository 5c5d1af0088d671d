"""Rational tangle arithmetic.

A rational tangle in a twist box is recorded by its slope, a reduced
fraction p/q with the vertical tangle (two parallel strands) at 1/0 and
the pure horizontal twist box with ``a`` half twists at 1/a.  Slopes are
kept canonical: q >= 0, and the infinite slope is always written 1/0.

Continued fraction convention (see FORMATS.md): a term list
``[t1, ..., tk]`` is read innermost first,

    value([t1, ..., tk]) = tk + 1/(t(k-1) + 1/(... + 1/t1)),

so ``[3] -> 3/1`` and ``[2, 3] -> 7/2``.  Evaluation runs the projective
recurrence (num, den) -> (t*num + den, num) starting from (t1, 1), which
never forms 0/0 and lands exactly on the canonical fraction.

Each box induces a pairing of its four boundary points {NW, NE, SW, SE}.
Which of the three pairings occurs depends only on the parities of p and
q; ``pairing`` applies that parity table and ``pairing_by_tracing``
recomputes the same answer by explicitly building the tangle one half
twist at a time.  The table is frozen against the trace, not the other
way around.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from typing import Iterable

from .errors import ParameterError


@dataclasses.dataclass(frozen=True)
class TangleFraction:
    """A reduced slope p/q with q >= 0; 1/0 denotes the vertical tangle."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 0:
            raise ParameterError(f"fraction {self.p}/{self.q} not canonical: q < 0")
        if self.q == 0 and self.p != 1:
            raise ParameterError("infinite slope must be written 1/0")
        if (self.p, self.q) == (0, 0):
            raise ParameterError("0/0 is not a slope")
        if math.gcd(abs(self.p), self.q) != 1:
            raise ParameterError(f"fraction {self.p}/{self.q} is not reduced")

    @classmethod
    def of(cls, p: int, q: int) -> "TangleFraction":
        """Canonicalize an arbitrary integer pair (p, q) != (0, 0)."""
        if (p, q) == (0, 0):
            raise ParameterError("0/0 is not a slope")
        if q == 0:
            return cls(1, 0)
        if q < 0:
            p, q = -p, -q
        g = math.gcd(abs(p), q)
        return cls(p // g, q // g)

    @classmethod
    def from_continued_fraction(cls, terms: Iterable[int]) -> "TangleFraction":
        ts = list(terms)
        if not ts:
            raise ParameterError("empty continued fraction")
        num, den = ts[0], 1
        for t in ts[1:]:
            num, den = t * num + den, num
        return cls.of(num, den)

    def continued_fraction(self) -> tuple[int, ...]:
        """An innermost-first term list evaluating back to this fraction.

        The infinite slope expands to (0, 0); everything else comes from
        the Euclidean algorithm with floor division, emitted outermost
        first and then reversed.
        """
        if self.q == 0:
            return (0, 0)
        out: list[int] = []
        p, q = self.p, self.q
        while q != 0:
            t = p // q
            out.append(t)
            p, q = q, p - t * q
        return tuple(reversed(out))

    @property
    def is_vertical(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


class Pairing(enum.Enum):
    """How a box joins its four boundary points.

    THROUGH_IDENTITY: NW-SW and NE-SE (both strands pass straight through).
    THROUGH_SWAP:     NW-SE and NE-SW (the strands trade columns).
    CAPS:             NW-NE and SW-SE (each pair of same-height points is
                      joined inside the box; no strand passes through).
    """

    THROUGH_IDENTITY = "through_identity"
    THROUGH_SWAP = "through_swap"
    CAPS = "caps"


def pairing(f: TangleFraction) -> Pairing:
    """Boundary pairing of the p/q box, by the parity table.

    p and q cannot both be even in a reduced fraction, so three cases
    remain: odd/odd swaps, odd/even passes straight through, even/odd
    caps off.  Frozen against ``pairing_by_tracing``.
    """
    if f.p % 2 == 1 and f.q % 2 == 1:
        return Pairing.THROUGH_SWAP
    if f.p % 2 == 1:
        return Pairing.THROUGH_IDENTITY
    return Pairing.CAPS


# endpoint sets for the two possible starting tangles of the trace
_ZERO = frozenset({frozenset({"NW", "NE"}), frozenset({"SW", "SE"})})
_VERTICAL = frozenset({frozenset({"NW", "SW"}), frozenset({"NE", "SE"})})


def _twist(state: frozenset, a: str, b: str) -> frozenset:
    def repl(x: str) -> str:
        return b if x == a else a if x == b else x

    return frozenset(frozenset(repl(x) for x in pair) for pair in state)


def pairing_by_tracing(terms: Iterable[int]) -> Pairing:
    """Boundary pairing computed by building the tangle twist by twist.

    A term list of odd length starts from the 0 tangle and applies
    horizontal, vertical, horizontal, ... twist moves; even length starts
    from the vertical tangle and leads with a vertical move.  Either way
    the final move is horizontal, matching the evaluation convention of
    ``from_continued_fraction``.  A horizontal half twist exchanges the
    two east endpoints, a vertical one the two south endpoints; the twist
    sign never changes which points are exchanged, so only |t| matters
    here.
    """
    ts = list(terms)
    if not ts:
        raise ParameterError("empty continued fraction")
    if len(ts) % 2 == 1:
        state, moves = _ZERO, ("H", "V")
    else:
        state, moves = _VERTICAL, ("V", "H")
    for idx, t in enumerate(ts):
        for _ in range(abs(t)):
            if moves[idx % 2] == "H":
                state = _twist(state, "NE", "SE")
            else:
                state = _twist(state, "SW", "SE")
    if state == _VERTICAL:
        return Pairing.THROUGH_IDENTITY
    if state == _ZERO:
        return Pairing.CAPS
    return Pairing.THROUGH_SWAP


def incompressibility_level(f: TangleFraction) -> int:
    """min(|q|, 3): how much of the box's tangle space is essential.

    0: vertical tangle, the box is trivial and imposes no condition.
    1: integer twists; the once-punctured disks are incompressible.
    2: adds incompressibility of the twice-punctured disks.
    3: |q| >= 3, the full condition needed of interior and end boxes.
    """
    return min(f.q, 3)

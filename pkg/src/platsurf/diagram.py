"""Plat diagrams of links.

A link in 2n-plat position is drawn on 2n vertical strands joined by m
rows of twist boxes, m odd.  Rows are numbered 1..m from the top.  Odd
rows hold n-1 boxes, box j sitting over strands (2j, 2j+1); even rows
hold n boxes, box j over strands (2j-1, 2j).  Above row 1 and below row
m the strands are capped in pairs (1,2), (3,4), ..., (2n-1, 2n).

Box coefficients follow FORMATS.md: ``Twist(a)`` is a box of ``a``
signed half twists (slope 1/a); ``Rational(p, q)`` holds an arbitrary
rational tangle of slope p/q.  A plain integer in the JSON form encodes
a twist box, a two-element array a rational one.

``check_hypotheses`` verifies the combinatorial hypotheses under which
the certified statements about essential surfaces apply:

  (i)   n >= 3 (the 2-bridge case n <= 2 is excluded and reported as a
        distinguished verdict);
  (ii)  every interior box, in every row, has nonzero denominator;
  (iii) the first and last box of every odd row has denominator >= 3,
        or >= 2 in the relaxed variant.  End boxes of even rows are
        unrestricted.

"Denominator" of a box means q of its canonical slope, so |a| for a
twist box.  The hypotheses constrain denominators only; signs are free.
"""

from __future__ import annotations

import dataclasses
import json
import math
import random
from typing import Any, Iterator, Sequence, Union

from .errors import MalformedDiagramError, ParameterError
from .tangles import TangleFraction

STRICT = "strict"
RELAXED = "relaxed"


@dataclasses.dataclass(frozen=True)
class Twist:
    """A box of ``a`` half twists between two adjacent strands."""

    a: int

    def __post_init__(self) -> None:
        if isinstance(self.a, bool) or not isinstance(self.a, int):
            raise MalformedDiagramError(f"twist count must be an int, got {self.a!r}")

    def __str__(self) -> str:
        return str(self.a)


@dataclasses.dataclass(frozen=True)
class Rational:
    """A box holding the rational tangle of slope p/q."""

    p: int
    q: int

    def __post_init__(self) -> None:
        for v in (self.p, self.q):
            if isinstance(v, bool) or not isinstance(v, int):
                raise MalformedDiagramError(f"rational box entries must be ints, got {v!r}")
        if (self.p, self.q) == (0, 0):
            raise MalformedDiagramError("rational box 0/0 is not a tangle")
        if math.gcd(abs(self.p), abs(self.q)) != 1:
            raise MalformedDiagramError(f"rational box {self.p}/{self.q} is not reduced")

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


TangleBox = Union[Twist, Rational]


def box_fraction(box: TangleBox) -> TangleFraction:
    """Canonical slope of a box: Twist(a) -> 1/a, Rational(p, q) -> p/q."""
    if isinstance(box, Twist):
        return TangleFraction.of(1, box.a)
    return TangleFraction.of(box.p, box.q)


def box_denominator(box: TangleBox) -> int:
    """q >= 0 of the canonical slope; |a| for a twist box."""
    return box_fraction(box).q


def row_length(n: int, i: int) -> int:
    """Number of boxes in row i: n-1 for odd rows, n for even rows."""
    return n - 1 if i % 2 == 1 else n


def box_strands(i: int, j: int) -> tuple[int, int]:
    """The strand pair under box j of row i."""
    if i % 2 == 1:
        return (2 * j, 2 * j + 1)
    return (2 * j - 1, 2 * j)


@dataclasses.dataclass(frozen=True)
class PlatDiagram:
    """A 2n-plat projection: n strand pairs, m rows of boxes, m odd."""

    n: int
    m: int
    rows: tuple[tuple[TangleBox, ...], ...]

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise MalformedDiagramError(f"n must be a positive int, got {self.n!r}")
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise MalformedDiagramError(f"m must be a positive int, got {self.m!r}")
        if self.m % 2 == 0:
            raise MalformedDiagramError(
                f"m = {self.m} is even: a plat needs an odd number of rows "
                "(an even count leaves the bottom caps misaligned)"
            )
        if len(self.rows) != self.m:
            raise MalformedDiagramError(
                f"expected {self.m} rows, got {len(self.rows)}"
            )
        for i, row in enumerate(self.rows, 1):
            want = row_length(self.n, i)
            if len(row) != want:
                raise MalformedDiagramError(
                    f"row {i} has {len(row)} boxes, expected {want}"
                )
            for box in row:
                if not isinstance(box, (Twist, Rational)):
                    raise MalformedDiagramError(f"row {i}: bad box {box!r}")

    @property
    def strand_count(self) -> int:
        return 2 * self.n

    def row_length(self, i: int) -> int:
        return row_length(self.n, i)

    def box(self, i: int, j: int) -> TangleBox:
        return self.rows[i - 1][j - 1]

    def boxes(self) -> Iterator[tuple[int, int, TangleBox]]:
        """Yield (row, column, box), rows top to bottom, boxes left to right."""
        for i, row in enumerate(self.rows, 1):
            for j, box in enumerate(row, 1):
                yield i, j, box

    @property
    def is_all_twist(self) -> bool:
        return all(isinstance(b, Twist) for _, _, b in self.boxes())

    @property
    def twist_crossing_count(self) -> int:
        """Total crossings drawn by the twist boxes."""
        return sum(abs(b.a) for _, _, b in self.boxes() if isinstance(b, Twist))

    def reflected(self) -> "PlatDiagram":
        """Mirror image across the vertical axis: every row reversed."""
        return PlatDiagram(self.n, self.m, tuple(tuple(reversed(r)) for r in self.rows))


def make_diagram(n: int, m: int, rows: Sequence[Sequence[Any]]) -> PlatDiagram:
    """Build a diagram, coercing ints to Twist and (p, q) pairs to Rational."""
    built = []
    for row in rows:
        out = []
        for box in row:
            if isinstance(box, (Twist, Rational)):
                out.append(box)
            elif isinstance(box, bool):
                raise MalformedDiagramError(f"bad box value {box!r}")
            elif isinstance(box, int):
                out.append(Twist(box))
            elif isinstance(box, (list, tuple)) and len(box) == 2:
                out.append(Rational(box[0], box[1]))
            else:
                raise MalformedDiagramError(f"bad box value {box!r}")
        built.append(tuple(out))
    return PlatDiagram(n, m, tuple(built))


# ---------------------------------------------------------------------------
# hypothesis checking


def _ends(length: int) -> tuple[int, ...]:
    # first and last box index; a single box is both
    return (1,) if length == 1 else (1, length)


@dataclasses.dataclass(frozen=True)
class HypothesisReport:
    """Verdicts and witnesses for the three hypotheses of a diagram.

    ``witness`` triples are (row, column, value) where value is the box's
    JSON form.  ``two_bridge`` flags the excluded case n <= 2, reported
    separately from an ordinary failure of (i) so callers can refuse with
    the right explanation.
    """

    mode: str
    n: int
    m: int
    n_at_least_3: bool
    interior_nonzero: bool
    odd_row_ends_ok: bool
    interior_zero_boxes: tuple[tuple[int, int, Any], ...]
    small_end_boxes: tuple[tuple[int, int, Any], ...]

    @property
    def two_bridge(self) -> bool:
        return self.n <= 2

    @property
    def passed(self) -> bool:
        return self.n_at_least_3 and self.interior_nonzero and self.odd_row_ends_ok

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "m": self.m,
            "two_bridge": self.two_bridge,
            "conditions": {
                "n_at_least_3": self.n_at_least_3,
                "interior_nonzero": self.interior_nonzero,
                "odd_row_ends_ok": self.odd_row_ends_ok,
            },
            "witnesses": {
                "interior_zero": [list(w) for w in self.interior_zero_boxes],
                "small_ends": [list(w) for w in self.small_end_boxes],
            },
            "passed": self.passed,
        }


def _box_json(box: TangleBox) -> Any:
    return box.a if isinstance(box, Twist) else [box.p, box.q]


def check_hypotheses(d: PlatDiagram, mode: str = STRICT) -> HypothesisReport:
    """Check conditions (i)-(iii); relaxed mode lowers the end bound to 2."""
    if mode not in (STRICT, RELAXED):
        raise ParameterError(f"unknown hypothesis mode {mode!r}")
    end_bound = 3 if mode == STRICT else 2

    interior_zero = []
    small_ends = []
    for i, j, box in d.boxes():
        length = d.row_length(i)
        is_end = j in _ends(length)
        den = box_denominator(box)
        if not is_end and den == 0:
            interior_zero.append((i, j, _box_json(box)))
        if i % 2 == 1 and is_end and den < end_bound:
            small_ends.append((i, j, _box_json(box)))

    return HypothesisReport(
        mode=mode,
        n=d.n,
        m=d.m,
        n_at_least_3=d.n >= 3,
        interior_nonzero=not interior_zero,
        odd_row_ends_ok=not small_ends,
        interior_zero_boxes=tuple(interior_zero),
        small_end_boxes=tuple(small_ends),
    )


# ---------------------------------------------------------------------------
# random generation


def random_diagram(
    n: int,
    m: int,
    max_twist: int = 5,
    seed: int | None = None,
    require_parity: bool = False,
) -> PlatDiagram:
    """A random all-twist diagram satisfying the strict hypotheses.

    Odd-row end boxes draw |a| from [3, max_twist], interior boxes from
    [1, max_twist], even-row end boxes from [0, max_twist]; signs are
    uniform.  With ``require_parity`` the diagram is adjusted so that
    some odd row starts with an odd twist count and some odd row ends
    with one (the slope-coverage parity criterion).
    """
    if n < 3:
        raise ParameterError("random_diagram needs n >= 3")
    if m < 1 or m % 2 == 0:
        raise ParameterError("random_diagram needs odd m >= 1")
    if max_twist < 3:
        raise ParameterError("max_twist must be at least 3")
    rng = random.Random(seed)

    def sign() -> int:
        return rng.choice((-1, 1))

    rows: list[list[Twist]] = []
    for i in range(1, m + 1):
        length = row_length(n, i)
        row = []
        for j in range(1, length + 1):
            is_end = j in _ends(length)
            if i % 2 == 1 and is_end:
                a = sign() * rng.randint(3, max_twist)
            elif is_end:
                a = rng.randint(-max_twist, max_twist)
            else:
                a = sign() * rng.randint(1, max_twist)
            row.append(Twist(a))
        rows.append(row)

    if require_parity:
        odds = [v for v in range(3, max_twist + 1) if v % 2 == 1]
        odd_rows = list(range(1, m + 1, 2))
        if not any(abs(rows[i - 1][0].a) % 2 == 1 for i in odd_rows):
            i = rng.choice(odd_rows)
            rows[i - 1][0] = Twist(sign() * rng.choice(odds))
        if not any(abs(rows[i - 1][-1].a) % 2 == 1 for i in odd_rows):
            i = rng.choice(odd_rows)
            rows[i - 1][-1] = Twist(sign() * rng.choice(odds))

    return PlatDiagram(n, m, tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# serialization


def to_json_dict(d: PlatDiagram) -> dict:
    return {
        "n": d.n,
        "m": d.m,
        "rows": [[_box_json(b) for b in row] for row in d.rows],
    }


def from_json_dict(obj: Any) -> PlatDiagram:
    if not isinstance(obj, dict):
        raise MalformedDiagramError("diagram JSON must be an object")
    unknown = set(obj) - {"n", "m", "rows"}
    if unknown:
        raise MalformedDiagramError(f"unknown keys in diagram JSON: {sorted(unknown)}")
    for key in ("n", "m", "rows"):
        if key not in obj:
            raise MalformedDiagramError(f"diagram JSON missing key {key!r}")
    if not isinstance(obj["rows"], list) or not all(isinstance(r, list) for r in obj["rows"]):
        raise MalformedDiagramError("rows must be a list of lists")
    return make_diagram(obj["n"], obj["m"], obj["rows"])


def diagram_to_json(d: PlatDiagram) -> str:
    return json.dumps(to_json_dict(d), indent=2) + "\n"


def diagram_from_json(text: str) -> PlatDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDiagramError(f"diagram file is not valid JSON: {e}") from e
    return from_json_dict(obj)


def canonical_diagram_bytes(d: PlatDiagram) -> bytes:
    """Compact, key-sorted JSON encoding used for digests."""
    return json.dumps(to_json_dict(d), sort_keys=True, separators=(",", ":")).encode()

"""Pipe dreams on the staircase board and skew pipe dreams on the shifted
staircase, with ladder moves, bottom diagrams, ladder closures, transposed
mitosis, and the box-removal operators that build the Demazure face index
sets.

Boards are stored as (row, column) pairs: the type A board has rows
1..n with row i holding columns 1..n-i+1; the shifted type C board has row i
holding columns i..2n-i.  Two position orderings matter and both are fixed
once and for all: the facet ordering (used by k_D, matching the string-cone
facet arrangement) and the word ordering (used by k'_D, matching the standard
reduced word); in type C a single ordering plays both roles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import (
    RootDatum,
    WeylElement,
    inverse,
    length,
    longest_element,
    multiply,
    standard_word,
    word_to_element,
    compatible_subsets,
)


class MOpError(ValueError):
    """A box-removal operator was applied where its preconditions fail."""


@dataclass(frozen=True)
class Diagram:
    datum: RootDatum
    boxes: frozenset

    def __post_init__(self):
        board = board_boxes(self.datum)
        if not self.boxes <= board:
            raise ValueError("boxes %r leave the board" % (sorted(self.boxes - board),))

    def size(self) -> int:
        return len(self.boxes)


@lru_cache(maxsize=None)
def board_boxes(datum: RootDatum) -> frozenset:
    n = datum.rank
    if datum.family == "A":
        return frozenset((i, j) for i in range(1, n + 1) for j in range(1, n - i + 2))
    return frozenset((i, j) for i in range(1, n + 1) for j in range(i, 2 * n - i + 1))


def full_diagram(datum: RootDatum) -> Diagram:
    return Diagram(datum, board_boxes(datum))


def diagram(datum: RootDatum, boxes) -> Diagram:
    return Diagram(datum, frozenset(boxes))


@lru_cache(maxsize=None)
def facet_ordering(datum: RootDatum) -> tuple:
    """Board positions in facet order (drives k_D).

    Type A: rows bottom to top, columns left to right.  Type C: rows bottom to
    top, columns right to left (the single ordering of the shifted board)."""
    n = datum.rank
    out = []
    if datum.family == "A":
        for i in range(n, 0, -1):
            for j in range(1, n - i + 2):
                out.append((i, j))
    else:
        for i in range(n, 0, -1):
            for j in range(2 * n - i, i - 1, -1):
                out.append((i, j))
    return tuple(out)


@lru_cache(maxsize=None)
def word_ordering(datum: RootDatum) -> tuple:
    """Board positions in word order (drives k'_D): position k sits in the row
    prescribed by the standard word's block and the column equal to its letter
    (type A) or determined by it (type C, where this is facet order)."""
    n = datum.rank
    if datum.family == "C":
        return facet_ordering(datum)
    out = []
    for r in range(1, n + 1):
        for j in range(r, 0, -1):
            out.append((n - r + 1, j))
    return tuple(out)


@lru_cache(maxsize=None)
def _facet_positions(datum: RootDatum) -> dict:
    return {box: k for k, box in enumerate(facet_ordering(datum), start=1)}


@lru_cache(maxsize=None)
def _word_positions(datum: RootDatum) -> dict:
    return {box: k for k, box in enumerate(word_ordering(datum), start=1)}


def arrangement_kd(d: Diagram) -> tuple:
    """Positions of the diagram's boxes in facet order, increasing."""
    pos = _facet_positions(d.datum)
    return tuple(sorted(pos[b] for b in d.boxes))


def arrangement_kd_prime(d: Diagram) -> tuple:
    """Positions of the complement's boxes in word order, increasing."""
    pos = _word_positions(d.datum)
    return tuple(sorted(pos[b] for b in board_boxes(d.datum) - d.boxes))


def word_of_diagram(d: Diagram) -> tuple:
    """Letters of the standard word at the k_D positions."""
    word = standard_word(d.datum)
    return tuple(word[k - 1] for k in arrangement_kd(d))


def is_reduced(d: Diagram) -> bool:
    letters = word_of_diagram(d)
    return length(word_to_element(d.datum, letters)) == len(letters)


def column_letter(datum: RootDatum, j: int) -> int:
    """Letter attached to a board column (type C pairs columns n-i+1, n+i-1)."""
    if datum.family == "A":
        raise ValueError("column letters are a type C notion")
    return abs(j - datum.rank) + 1


def letter_columns(datum: RootDatum, i: int) -> tuple:
    n = datum.rank
    return (n - i + 1,) if i == 1 else (n - i + 1, n + i - 1)


# ---------------------------------------------------------------------------
# ladder moves


def ladder_move(d: Diagram, i: int, j: int):
    """The ladder move with source box (i, j); None when inapplicable."""
    return _ladder_a(d, i, j) if d.datum.family == "A" else _ladder_c(d, i, j)


def _ladder_a(d: Diagram, i: int, j: int):
    boxes = d.boxes
    if (i, j) not in boxes or (i, j + 1) in boxes:
        return None
    m = 1
    while m < i:
        above, above_r = (i - m, j), (i - m, j + 1)
        both_in = above in boxes and above_r in boxes
        if not both_in:
            if above in boxes or above_r in boxes:
                return None
            new = (i - m, j + 1)
            return Diagram(d.datum, (boxes - {(i, j)}) | {new})
        m += 1
    return None


def _ladder_c(d: Diagram, i: int, j: int):
    boxes = d.boxes
    if (i, j) not in boxes or (i, j + 1) in boxes:
        return None
    order = facet_ordering(d.datum)
    pos = _facet_positions(d.datum)
    k = pos[(i, j)]
    n = d.datum.rank
    cols = {j, 2 * n - j}
    board = board_boxes(d.datum)
    for ell in range(k + 1, len(order) + 1):
        p, q = order[ell - 1]
        if q not in cols:
            continue
        here = (p, q) in boxes
        right = (p, q + 1) in boxes
        if here and right:
            continue
        if here or right:
            return None
        if (p, q + 1) not in board:
            return None
        return Diagram(d.datum, (boxes - {(i, j)}) | {(p, q + 1)})
    return None


def _source_columns(d: Diagram, cols):
    """Boxes of d whose column is in cols (all boxes when cols is None)."""
    if cols is None:
        return sorted(d.boxes)
    return sorted(b for b in d.boxes if b[1] in cols)


def ladder_closure(d: Diagram, source_cols=None) -> frozenset:
    """Closure under ladder moves, optionally restricted to source columns."""
    seen = {d}
    frontier = [d]
    while frontier:
        new = []
        for cur in frontier:
            for (i, j) in _source_columns(cur, source_cols):
                moved = ladder_move(cur, i, j)
                if moved is not None and moved not in seen:
                    seen.add(moved)
                    new.append(moved)
        frontier = new
    return frozenset(seen)


# ---------------------------------------------------------------------------
# bottom diagrams


@lru_cache(maxsize=None)
def bottom_diagram(datum: RootDatum, w: WeylElement) -> Diagram:
    """The diagram whose complement word-positions form the lexicographically
    minimal extraction of w from the standard word (the full board at the
    identity)."""
    if length(w) == 0:
        return full_diagram(datum)
    word = standard_word(datum)
    subsets = compatible_subsets(datum, word, w)
    kprime = min(subsets)
    order = word_ordering(datum)
    complement = {order[k - 1] for k in kprime}
    out = Diagram(datum, board_boxes(datum) - complement)
    if datum.family == "A":
        closed = _bottom_closed_form_a(datum, w)
        assert out.boxes == closed, "lex-min bottom diagram disagrees with closed form"
    else:
        _assert_staircase_shape(out)
    return out


def _bottom_closed_form_a(datum: RootDatum, w: WeylElement):
    n = datum.rank
    u = multiply(inverse(w), longest_element(datum)).oneline
    boxes = set()
    for i in range(1, n + 1):
        m = sum(1 for j in range(i + 1, n + 2) if u[j - 1] < u[i - 1])
        boxes.update((i, jj) for jj in range(1, m + 1))
    return frozenset(boxes)


def _assert_staircase_shape(d: Diagram):
    n = d.datum.rank
    for i in range(1, n + 1):
        row = sorted(j for (r, j) in d.boxes if r == i)
        assert row == list(range(i, i + len(row))), "bottom diagram is not left-justified"


def ladder_set(datum: RootDatum, w: WeylElement) -> frozenset:
    """All diagrams reachable from the bottom diagram by ladder moves."""
    return ladder_closure(bottom_diagram(datum, w))


# ---------------------------------------------------------------------------
# transposed mitosis (type A)


def _start_top(d: Diagram, j: int) -> int:
    n = d.datum.rank
    limit = n - j + 1
    for i in range(1, limit + 1):
        if (i, j) not in d.boxes:
            return i
    return limit + 1


def mitosis_candidates(d: Diagram, j: int) -> tuple:
    start = _start_top(d, j)
    return tuple(i for i in range(1, start) if (i, j + 1) not in d.boxes)


def mitosis_top(j: int, d: Diagram) -> frozenset:
    """Transposed mitosis: one offspring per candidate row, produced by a
    forced chain of column-j ladder moves after removing the topmost box."""
    if d.datum.family != "A":
        raise ValueError("transposed mitosis is a type A operator")
    cand = mitosis_candidates(d, j)
    out = set()
    for i in cand:
        rows = [p for p in range(1, i + 1) if (p, j + 1) not in d.boxes]
        assert rows and rows[-1] == i
        cur = Diagram(d.datum, d.boxes - {(rows[0], j)})
        for p in rows[1:]:
            cur = ladder_move(cur, p, j)
            assert cur is not None, "mitosis ladder chain broke"
        out.add(cur)
    return frozenset(out)


def mitosis_chain(datum: RootDatum, letters) -> frozenset:
    """Fold transposed mitosis over a word, starting from the full board."""
    current = {full_diagram(datum)}
    for j in letters:
        nxt = set()
        for d in current:
            nxt |= mitosis_top(j, d)
        current = nxt
    return frozenset(current)


# ---------------------------------------------------------------------------
# the box-removal operators M_i and the sets M(w)


def m_op(datum: RootDatum, i: int, d: Diagram) -> frozenset:
    """Remove the designated letter-i box and close under letter-i ladder
    moves; hard error when the preconditions fail."""
    if datum.family == "A":
        cand = mitosis_candidates(d, i)
        if not cand:
            raise MOpError("no removable box in column %d of %r" % (i, sorted(d.boxes)))
        p0 = cand[0]
        stripped = Diagram(datum, d.boxes - {(p0, i)})
        return ladder_closure(stripped, source_cols={i})
    order = facet_ordering(datum)
    cols = set(letter_columns(datum, i))
    candidates = [
        r
        for r in range(1, len(order) + 1)
        if order[r - 1][1] in cols and (order[r - 1][0], order[r - 1][1] + 1) not in d.boxes
    ]
    if not candidates:
        raise MOpError("no removable box for letter %d in %r" % (i, sorted(d.boxes)))
    r0 = max(candidates)
    for r in range(r0, len(order) + 1):
        p, q = order[r - 1]
        if q not in cols:
            continue
        if (p, q) not in d.boxes:
            raise MOpError("letter %d tail not filled in %r" % (i, sorted(d.boxes)))
        if r > r0 and (p, q + 1) not in d.boxes:
            raise MOpError("letter %d tail companion missing in %r" % (i, sorted(d.boxes)))
    stripped = Diagram(datum, d.boxes - {order[r0 - 1]})
    return ladder_closure(stripped, source_cols=cols)


@lru_cache(maxsize=None)
def mset(datum: RootDatum, w: WeylElement) -> frozenset:
    """The Demazure index set of diagrams: fold M over the letters extracted
    by the bottom diagram's complement positions, starting from the full
    board."""
    word = standard_word(datum)
    kprime = arrangement_kd_prime(bottom_diagram(datum, w))
    current = frozenset([full_diagram(datum)])
    for k in kprime:
        i = word[k - 1]
        nxt = set()
        for d in current:
            nxt |= m_op(datum, i, d)
        current = frozenset(nxt)
    return current


def ascii_diagram(d: Diagram) -> str:
    """Plus marks on the board, dots for empty boxes."""
    n = d.datum.rank
    lines = []
    if d.datum.family == "A":
        for i in range(1, n + 1):
            row = ["+" if (i, j) in d.boxes else "." for j in range(1, n - i + 2)]
            lines.append("".join(row))
    else:
        for i in range(1, n + 1):
            pad = " " * (i - 1)
            row = ["+" if (i, j) in d.boxes else "." for j in range(i, 2 * n - i + 1)]
            lines.append(pad + "".join(row))
    return "\n".join(lines)


def diagram_from_rows(datum: RootDatum, rows) -> Diagram:
    """Build a diagram from an iterable of (row, columns) pairs."""
    boxes = set()
    for i, cols in rows:
        boxes.update((i, j) for j in cols)
    return Diagram(datum, frozenset(boxes))

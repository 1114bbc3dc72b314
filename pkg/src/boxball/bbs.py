"""Box-ball states and their time-evolution algorithms.

A state places finitely many balls with colors 1..n into boxes indexed by
the integers; box j holds at most ``capacity(j)`` balls.  The vacancy
sentinel e is represented as n+1 and compares greater than every color.

Boxes are expanded into *slots*: with d(0) = 0 and d(j) - d(j-1) equal to
the capacity of box j, box j owns slots d(j-1)+1 .. d(j).  Inside a box
the canonical arrangement packs vacancies to the left and sorts ball
colors ascending, so a state is fully described by the multiset of colors
per box.  Standard BBS: every capacity 1, all colors distinct.  Advanced:
every capacity 1, repeated colors allowed.  Generalized: arbitrary
capacities.

One time step moves colors 1, 2, ..., n in order, the leftmost unmoved
ball of the current color first, each ball to the nearest vacant slot
strictly to its right (``original_step``).  The same step is computed by
sweeping a carrier along the slot word (``carrier_step``), and the
occupied-box labels evolve autonomously by a carrier over the vacant-slot
labels (``box_label_step``, ``q_evolve``).

Labels and slot indices are plain Python integers; one step shifts labels
right by at most the ball count N, so magnitudes stay small at desk scale.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right, insort
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from .rsk import BiWord, dual, rsk
from .tableau import Tableau, Word, shape, tab, word_of

Carrier = tuple[int, ...]  # weakly increasing multiset of letters or labels
LabelSequence = tuple[int, ...]  # box labels listed per ascending ball color


@dataclass(frozen=True)
class CapacityProfile:
    """Per-box capacities: explicit overrides over a default for all other boxes."""

    explicit: dict[int, int] = field(default_factory=dict)
    default: int = 1

    def __post_init__(self) -> None:
        if int(self.default) < 1:
            raise ValueError(f"default capacity {self.default} must be at least 1")
        object.__setattr__(self, "default", int(self.default))
        explicit = {}
        for label, cap in self.explicit.items():
            label, cap = int(label), int(cap)
            if cap < 1:
                raise ValueError(f"capacity {cap} of box {label} must be at least 1")
            if cap != self.default:
                explicit[label] = cap
        object.__setattr__(self, "explicit", explicit)

    def capacity(self, label: int) -> int:
        return self.explicit.get(label, self.default)

    def slot_end(self, label: int) -> int:
        """Cumulative boundary d(label); box j owns slots d(j-1)+1 .. d(j)."""
        total = label * self.default
        if label >= 0:
            for k, cap in self.explicit.items():
                if 1 <= k <= label:
                    total += cap - self.default
        else:
            for k, cap in self.explicit.items():
                if label + 1 <= k <= 0:
                    total -= cap - self.default
        return total

    def slot_range(self, label: int) -> tuple[int, int]:
        """Inclusive slot interval owned by one box."""
        return self.slot_end(label - 1) + 1, self.slot_end(label)

    def label_of_slot(self, slot: int) -> int:
        """Label of the box owning a slot index."""
        if slot > 0:
            lo, hi = 0, 1
            while self.slot_end(hi) < slot:
                hi *= 2
        else:
            lo, hi = -1, 0
            while self.slot_end(lo) >= slot:
                lo *= 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.slot_end(mid) >= slot:
                hi = mid
            else:
                lo = mid
        return hi


UNIT_CAPACITY = CapacityProfile()


@dataclass(frozen=True)
class State:
    """A box-ball configuration: color multiset per box label."""

    n: int
    balls: dict[int, Word] = field(default_factory=dict)
    capacities: CapacityProfile = UNIT_CAPACITY

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("number of colors must be nonnegative")
        balls: dict[int, Word] = {}
        for label, colors in self.balls.items():
            label = int(label)
            colors = tuple(sorted(int(c) for c in colors))
            if not colors:
                continue
            if colors[0] < 1 or colors[-1] > self.n:
                raise ValueError(f"box {label} holds a color outside 1..{self.n}")
            cap = self.capacities.capacity(label)
            if len(colors) > cap:
                raise ValueError(f"box {label} holds {len(colors)} balls but has capacity {cap}")
            balls[label] = colors
        object.__setattr__(self, "balls", balls)

    @property
    def ball_count(self) -> int:
        return sum(len(colors) for colors in self.balls.values())

    @property
    def sentinel(self) -> int:
        return self.n + 1

    def is_empty(self) -> bool:
        return not self.balls


def occupied_slots(s: State) -> list[tuple[int, int]]:
    """Canonical (slot, color) pairs, ascending: balls pack to the right of each box."""
    out: list[tuple[int, int]] = []
    for label in sorted(s.balls):
        colors = s.balls[label]
        end = s.capacities.slot_end(label)
        start = end - len(colors) + 1
        out.extend((start + k, c) for k, c in enumerate(colors))
    return out


def window(s: State) -> tuple[int, int]:
    """Slot interval [p, q] containing the occupied slots now and after one step."""
    if s.is_empty():
        raise ValueError("an empty state has no window")
    pairs = occupied_slots(s)
    return pairs[0][0], pairs[-1][0] + s.ball_count


def slot_word(s: State, lo: int, hi: int) -> Word:
    """One letter per slot in [lo, hi]: the ball color, or the sentinel n+1."""
    e = s.sentinel
    letters = [e] * (hi - lo + 1)
    for slot, color in occupied_slots(s):
        if lo <= slot <= hi:
            letters[slot - lo] = color
    return tuple(letters)


def state_to_biword(s: State) -> BiWord:
    """Columns (box label over ball color) scanned left to right."""
    cols = [(label, color) for label in sorted(s.balls) for color in s.balls[label]]
    return BiWord(tuple(i for i, _ in cols), tuple(j for _, j in cols))


def biword_to_state(bw: BiWord, capacities: CapacityProfile, n: int) -> State:
    """Inverse of ``state_to_biword`` against a given capacity profile."""
    boxes: dict[int, list[int]] = defaultdict(list)
    for label, color in zip(bw.top, bw.bottom):
        boxes[label].append(color)
    for label, colors in boxes.items():
        cap = capacities.capacity(label)
        if len(colors) > cap:
            raise ValueError(f"capacity exceeded at box {label}: {len(colors)} balls in capacity {cap}")
    return State(n, {label: tuple(colors) for label, colors in boxes.items()}, capacities)


def p_symbol(s: State) -> Tableau:
    """Insertion tableau of the color word; conserved by the time evolution."""
    return tab(state_to_biword(s).bottom)


def q_symbol(s: State) -> Tableau:
    """Recording tableau; carries the box labels and evolves autonomously."""
    return rsk(state_to_biword(s))[1]


def box_label_sequence(s: State) -> LabelSequence:
    """Labels of the occupied boxes listed per ascending ball color."""
    return dual(state_to_biword(s)).bottom


def carrier_pass(carrier: Iterable[int], word: Iterable[int]) -> tuple[Word, Carrier]:
    """Sweep a carrier along a word, exchanging one element per letter.

    At each letter x the carrier unloads the smallest element strictly
    greater than x, or its minimum when no element exceeds x, and loads x
    in its place.  Returns the unloaded word and the final carrier.  Every
    exchange is an elementary Knuth rearrangement, so the concatenations
    satisfy tab(carrier + word) == tab(word' + carrier').
    """
    load = sorted(int(x) for x in carrier)
    out: list[int] = []
    for x in word:
        x = int(x)
        if not load:
            raise ValueError("cannot run a carrier pass with an empty carrier")
        i = bisect_right(load, x)
        if i == len(load):
            i = 0
        out.append(load[i])
        del load[i]
        insort(load, x)
    return tuple(out), tuple(load)


def _rebuild(s: State, placed: Iterable[tuple[int, int]]) -> State:
    """State with the same colors/capacities and balls at the given (slot, color)s."""
    boxes: dict[int, list[int]] = defaultdict(list)
    for slot, color in placed:
        boxes[s.capacities.label_of_slot(slot)].append(color)
    return State(s.n, {label: tuple(colors) for label, colors in boxes.items()}, s.capacities)


def original_step(s: State) -> State:
    """One time step by the ball-moving rule.

    Colors move in increasing order, the leftmost unmoved ball of the
    current color first; each ball jumps to the nearest vacant slot
    strictly to its right, where vacancy accounts for balls already moved
    and slots vacated during this step.
    """
    if s.is_empty():
        return s
    pairs = occupied_slots(s)
    p, q = window(s)
    occupied = {slot for slot, _ in pairs}
    vacant = [i for i in range(p, q + 1) if i not in occupied]
    by_color: dict[int, list[int]] = defaultdict(list)
    for slot, color in pairs:
        by_color[color].append(slot)
    placed: list[tuple[int, int]] = []
    for color in sorted(by_color):
        for slot in by_color[color]:
            i = bisect_right(vacant, slot)
            assert i < len(vacant), "window [p, q] always contains the target slot"
            target = vacant.pop(i)
            insort(vacant, slot)
            placed.append((target, color))
    return _rebuild(s, placed)


def reverse_step(s: State) -> State:
    """One time step backwards; inverse of ``original_step`` on every state.

    Left and right exchange roles and the colors move in decreasing order,
    the rightmost unmoved ball of the current color first, each ball to
    the nearest vacant slot strictly to its left.  For the slot scan the
    balls of each box are packed to the *left* (colors still ascending),
    mirroring the canonical packing.
    """
    if s.is_empty():
        return s
    pairs: list[tuple[int, int]] = []
    for label in sorted(s.balls):
        colors = s.balls[label]
        start = s.capacities.slot_end(label - 1) + 1
        pairs.extend((start + k, c) for k, c in enumerate(colors))
    lo = pairs[0][0] - s.ball_count
    hi = pairs[-1][0]
    occupied = {slot for slot, _ in pairs}
    vacant = [i for i in range(lo, hi + 1) if i not in occupied]
    by_color: dict[int, list[int]] = defaultdict(list)
    for slot, color in pairs:
        by_color[color].append(slot)
    placed: list[tuple[int, int]] = []
    for color in sorted(by_color, reverse=True):
        for slot in reversed(by_color[color]):
            i = bisect_left(vacant, slot) - 1
            assert i >= 0, "the mirrored window always contains the target slot"
            target = vacant.pop(i)
            insort(vacant, slot)
            placed.append((target, color))
    return _rebuild(s, placed)


def carrier_step(s: State) -> State:
    """One time step by sweeping an all-sentinel carrier along the slot word.

    The carrier holds N copies of e = n+1, one per ball; it returns to all
    sentinels at the end of the pass.  Equals ``original_step`` on every
    state.
    """
    if s.is_empty():
        return s
    p, q = window(s)
    e = s.sentinel
    word = slot_word(s, p, q)
    out, final = carrier_pass((e,) * s.ball_count, word)
    assert all(x == e for x in final), "the carrier must return to all sentinels"
    return _rebuild(s, ((p + k, x) for k, x in enumerate(out) if x != e))


def label_carrier(s: State) -> Carrier:
    """Labels of the vacant slots in the window, with slot multiplicity."""
    p, q = window(s)
    occupied = {slot for slot, _ in occupied_slots(s)}
    return tuple(s.capacities.label_of_slot(i) for i in range(p, q + 1) if i not in occupied)


def box_label_step(s: State) -> tuple[LabelSequence, Carrier]:
    """Evolve the box-label sequence by a carrier of vacant-slot labels.

    Returns (b', C'): b' is the box-label sequence of ``original_step(s)``
    and C' the vacant-slot labels of the evolved state over the same
    window.
    """
    if s.is_empty():
        raise ValueError("an empty state has no box-label sequence")
    return carrier_pass(label_carrier(s), box_label_sequence(s))


def _occupancy_of_tableau(q: Tableau) -> Counter[int]:
    counts: Counter[int] = Counter()
    for row in q.rows:
        counts.update(row)
    return counts


def q_evolve(q: Tableau, capacities: CapacityProfile) -> Tableau:
    """One step of the recording tableau, computed from the tableau alone.

    The tableau entries are the occupied box labels, so the vacant-slot
    carrier is derivable from the tableau content and the capacity
    profile; the carrier then runs along the reading word (rows left to
    right, bottom to top) and the output word is re-read as a tableau of
    the same shape.
    """
    if not q.rows:
        return q
    counts = _occupancy_of_tableau(q)
    total = sum(counts.values())
    occupied: set[int] = set()
    for label, m in counts.items():
        cap = capacities.capacity(label)
        if m > cap:
            raise ValueError(f"tableau puts {m} balls into box {label} of capacity {cap}")
        end = capacities.slot_end(label)
        occupied.update(range(end - m + 1, end + 1))
    p = min(occupied)
    hi = max(occupied) + total
    carrier = tuple(capacities.label_of_slot(i) for i in range(p, hi + 1) if i not in occupied)
    out, _ = carrier_pass(carrier, word_of(q))
    evolved = tab(out)
    assert shape(evolved) == shape(q), "the carrier image of a tableau word keeps its shape"
    return evolved


def evolve(s: State, steps: int, algorithm: str = "original") -> list[State]:
    """Trajectory [s, step(s), ...] of length steps + 1."""
    if steps < 0:
        raise ValueError("step count must be nonnegative")
    step = {"original": original_step, "carrier": carrier_step}.get(algorithm)
    if step is None:
        raise ValueError(f"unknown algorithm {algorithm!r}; expected 'original' or 'carrier'")
    out = [s]
    for _ in range(steps):
        out.append(step(out[-1]))
    return out


def reduce_generalized_to_advanced(
    bw: BiWord, capacities: CapacityProfile
) -> tuple[BiWord, dict[int, int]]:
    """Replace box labels by absolute slot indices.

    Each occupied box's balls take the last slots of the box, ascending
    with color.  Returns the advanced bi-word together with the slot-to-
    label map over the window, which recovers the generalized bi-word.
    """
    counts = Counter(bw.top)
    for label, m in counts.items():
        cap = capacities.capacity(label)
        if m > cap:
            raise ValueError(f"capacity exceeded at box {label}: {m} balls in capacity {cap}")
    tops: list[int] = []
    filled = Counter()
    for label in bw.top:
        end = capacities.slot_end(label)
        tops.append(end - counts[label] + 1 + filled[label])
        filled[label] += 1
    out = BiWord(tuple(tops), bw.bottom)
    if not tops:
        return out, {}
    p, q = tops[0], tops[-1] + len(tops)
    return out, {i: capacities.label_of_slot(i) for i in range(p, q + 1)}


def reduce_advanced_to_standard(bw: BiWord) -> tuple[BiWord, dict[int, int]]:
    """Relabel the balls 1..N in the dual bi-word's color order.

    The k-th column of the dual (sorted by color, then label) becomes ball
    k; the returned rank-to-color map recovers the advanced bi-word.
    """
    cols = bw.columns()
    order = sorted(range(len(cols)), key=lambda k: (cols[k][1], cols[k][0]))
    color_map = {r + 1: cols[k][1] for r, k in enumerate(order)}
    rank = {k: r + 1 for r, k in enumerate(order)}
    return BiWord(bw.top, tuple(rank[k] for k in range(len(cols)))), color_map

"""Brute-force reference implementations, used by tests and ``verify`` only.

Deliberately slow and deliberately independent: nothing here calls the
fast paths, so agreement between the two is evidence, not tautology.
"""

from __future__ import annotations

from typing import Iterable

from .bbs import State
from .tableau import Word, as_word


class SearchInconclusive(RuntimeError):
    """The search budget ran out before reaching an answer."""


def _local_moves(w: Word) -> list[Word]:
    # Both elementary rearrangements and their inverses, spelled out
    # directly so this stays independent of the production move generator.
    out = []
    for i in range(len(w) - 2):
        y, z, x = w[i], w[i + 1], w[i + 2]
        if x < y <= z:
            out.append(w[:i] + (y, x, z) + w[i + 3:])
        y, x, z = w[i], w[i + 1], w[i + 2]
        if x < y <= z:
            out.append(w[:i] + (y, z, x) + w[i + 3:])
        x, z, y = w[i], w[i + 1], w[i + 2]
        if x <= y < z:
            out.append(w[:i] + (z, x, y) + w[i + 3:])
        z, x, y = w[i], w[i + 1], w[i + 2]
        if x <= y < z:
            out.append(w[:i] + (x, z, y) + w[i + 3:])
    return out


def bfs_knuth_equivalent(a: Iterable[int], b: Iterable[int], max_frontier: int = 10**6) -> bool:
    """Exhaustive breadth-first reachability through elementary rearrangements.

    Raises SearchInconclusive when more than ``max_frontier`` words would
    have to be visited; that signal is distinct from a definite False.
    """
    start, goal = as_word(a), as_word(b)
    if len(start) != len(goal) or sorted(start) != sorted(goal):
        return False
    if start == goal:
        return True
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for w in frontier:
            for v in _local_moves(w):
                if v in seen:
                    continue
                if v == goal:
                    return True
                seen.add(v)
                if len(seen) > max_frontier:
                    raise SearchInconclusive(
                        f"visited more than {max_frontier} words without an answer"
                    )
                next_frontier.append(v)
        frontier = next_frontier
    return False


def naive_original_step(s: State) -> State:
    """Ball-by-ball transcription of the moving rules, with linear scans.

    For each color in increasing order: while an unmoved ball of that
    color remains, take the leftmost one and walk right slot by slot to
    the first vacancy.
    """
    board: dict[int, int] = {}
    for label, colors in s.balls.items():
        end = s.capacities.slot_end(label)
        for k, color in enumerate(colors):
            board[end - len(colors) + 1 + k] = color
    moved: set[int] = set()
    for color in range(1, s.n + 1):
        while True:
            waiting = [slot for slot, c in board.items() if c == color and slot not in moved]
            if not waiting:
                break
            slot = min(waiting)
            target = slot + 1
            while target in board:
                target += 1
            del board[slot]
            board[target] = color
            moved.add(target)
    boxes: dict[int, list[int]] = {}
    for slot, color in board.items():
        boxes.setdefault(s.capacities.label_of_slot(slot), []).append(color)
    return State(s.n, {label: tuple(colors) for label, colors in boxes.items()}, s.capacities)

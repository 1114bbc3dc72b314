"""Randomized invariant suites and golden-fixture checks for ``verify``.

The sampler draws states with at most 6 colors, 12 balls, capacity 4 per
box, and occupied boxes spanning at most 30 labels; with a fixed seed the
whole run is deterministic, so any failure is reproducible from the seed
alone.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .bbs import (
    BiWord,
    CapacityProfile,
    State,
    UNIT_CAPACITY,
    biword_to_state,
    box_label_sequence,
    box_label_step,
    carrier_pass,
    carrier_step,
    evolve,
    label_carrier,
    original_step,
    p_symbol,
    q_evolve,
    q_symbol,
    reduce_advanced_to_standard,
    reduce_generalized_to_advanced,
    reverse_step,
    slot_word,
    state_to_biword,
    window,
)
from .notation import parse_state, render_state, render_trajectory
from .oracle import naive_original_step
from .rsk import dual, inverse_rsk, make_biword, matrix_of, render_biword, rsk, transpose
from .tableau import Tableau, render_tableau, shape, tab


@dataclass(frozen=True)
class SamplerBounds:
    max_colors: int = 6
    max_balls: int = 12
    max_capacity: int = 4
    max_span: int = 30


def random_state(
    rng: random.Random,
    bounds: SamplerBounds = SamplerBounds(),
    positive_labels: bool = False,
) -> State:
    """Draw a state within the sampler bounds; may be empty."""
    n = rng.randint(1, bounds.max_colors)
    width = rng.randint(1, bounds.max_span)
    lo = rng.randint(1, 5) if positive_labels else rng.randint(-5, 5)
    labels = list(range(lo, lo + width))
    explicit = {}
    if bounds.max_capacity > 1:
        for j in labels:
            if rng.random() < 0.3:
                explicit[j] = rng.randint(1, bounds.max_capacity)
    profile = CapacityProfile(explicit)
    free = {j: profile.capacity(j) for j in labels}
    balls: dict[int, list[int]] = defaultdict(list)
    for _ in range(rng.randint(0, bounds.max_balls)):
        open_boxes = [j for j in labels if free[j]]
        if not open_boxes:
            break
        j = rng.choice(open_boxes)
        balls[j].append(rng.randint(1, n))
        free[j] -= 1
    return State(n, {j: tuple(cs) for j, cs in balls.items()}, profile)


def random_biword(rng: random.Random, max_len: int = 10, max_entry: int = 6) -> BiWord:
    length = rng.randint(0, max_len)
    return make_biword(
        (rng.randint(1, max_entry), rng.randint(1, max_entry)) for _ in range(length)
    )


def standard_tableaux(outline: tuple[int, ...], limit: int) -> list[Tableau]:
    """Up to ``limit`` standard tableaux of the given shape (entries 1..N, each once)."""
    total = sum(outline)
    found: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in outline]

    def place(k: int) -> bool:
        if k > total:
            found.append(Tableau(tuple(tuple(row) for row in rows)))
            return len(found) >= limit
        for r in range(len(outline)):
            if len(rows[r]) < outline[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(k)
                if place(k + 1):
                    return True
                rows[r].pop()
        return False

    place(1)
    return found


# ---------------------------------------------------------------------------
# Single-instance checks

def check_p_conservation(s: State, steps: int = 10) -> bool:
    trajectory = evolve(s, steps)
    reference = p_symbol(trajectory[0])
    return all(p_symbol(x) == reference for x in trajectory[1:])


def check_algorithms_agree(s: State) -> bool:
    stepped = original_step(s)
    return stepped == carrier_step(s) == naive_original_step(s)


def check_reversible(s: State) -> bool:
    return reverse_step(original_step(s)) == s


def check_box_label(s: State) -> bool:
    """b' matches the evolved label sequence; C' is the leftover window capacity.

    The final carrier holds the labels of the window's slots minus the
    evolved occupied labels, as multisets: the available boxes for the
    next step over the same window.
    """
    if s.is_empty():
        return True
    labels_next, final_carrier = box_label_step(s)
    stepped = original_step(s)
    if labels_next != box_label_sequence(stepped):
        return False
    p, q = window(s)
    leftover = Counter(s.capacities.label_of_slot(i) for i in range(p, q + 1))
    leftover.subtract(labels_next)
    return Counter(final_carrier) == +leftover


def check_q_evolution(s: State) -> bool:
    """The carrier image of the recording tableau is the evolved recording tableau."""
    if s.is_empty():
        return True
    return q_evolve(q_symbol(s), s.capacities) == q_symbol(original_step(s))


def check_carrier_knuth(s: State) -> bool:
    """tab(C + w) == tab(w' + C') for the slot-word and box-label passes."""
    if s.is_empty():
        return True
    p, q = window(s)
    carrier = (s.sentinel,) * s.ball_count
    word = slot_word(s, p, q)
    out, final = carrier_pass(carrier, word)
    if tab(carrier + word) != tab(out + final):
        return False
    if min(s.balls) >= 1:  # labels double as tableau letters only when positive
        labels = box_label_sequence(s)
        carrier = label_carrier(s)
        out, final = carrier_pass(carrier, labels)
        if tab(carrier + labels) != tab(out + final):
            return False
    return True


def check_rsk_roundtrip(bw: BiWord) -> bool:
    p, q = rsk(bw)
    if inverse_rsk(p, q) != bw:
        return False
    mirrored = dual(bw)
    if dual(mirrored) != bw or rsk(mirrored) != (q, p):
        return False
    return matrix_of(mirrored) == transpose(matrix_of(bw))


def check_reduction_commutes(s: State) -> bool:
    """One generalized step equals reduce -> standard step -> un-reduce."""
    if s.is_empty():
        return True
    advanced, slot_labels = reduce_generalized_to_advanced(state_to_biword(s), s.capacities)
    standard, rank_colors = reduce_advanced_to_standard(advanced)
    n_std = len(standard)
    stepped_std = original_step(biword_to_state(standard, UNIT_CAPACITY, n_std))
    bw_std = state_to_biword(stepped_std)
    advanced_next = BiWord(bw_std.top, tuple(rank_colors[r] for r in bw_std.bottom))
    generalized_next = make_biword(
        (slot_labels[i], c) for i, c in zip(advanced_next.top, advanced_next.bottom)
    )
    return biword_to_state(generalized_next, s.capacities, s.n) == original_step(s)


def q_independence_instance(rng: random.Random) -> bool | None:
    """Two states sharing a recording tableau evolve to the same one.

    Returns None when the drawn shape admits fewer than two standard
    insertion tableaux (the caller resamples).
    """
    s = random_state(rng, positive_labels=True)
    if s.is_empty():
        return None
    q0 = q_symbol(s)
    candidates = standard_tableaux(shape(q0), 2)
    if len(candidates) < 2:
        return None
    total = len(q0)
    evolved = []
    for p0 in candidates:
        sibling = biword_to_state(inverse_rsk(p0, q0), s.capacities, total)
        evolved.append(q_symbol(original_step(sibling)))
    return evolved[0] == evolved[1] == q_evolve(q0, s.capacities)


# ---------------------------------------------------------------------------
# Suites

@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        verdict = "ok" if self.ok else "FAIL"
        return f"{self.name}: {self.passed}/{self.passed + self.failed} {verdict}"


@dataclass
class VerifyReport:
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.suites)

    def lines(self) -> list[str]:
        out = [r.line() for r in self.suites]
        out.append("all checks passed" if self.ok else "SOME CHECKS FAILED")
        return out


def _state_suite(
    name: str,
    check: Callable[[State], bool],
    rng: random.Random,
    cases: int,
    positive_labels: bool = False,
) -> SuiteResult:
    result = SuiteResult(name)
    for _ in range(cases):
        s = random_state(rng, positive_labels=positive_labels)
        if check(s):
            result.passed += 1
        else:
            result.failed += 1
    return result


def run_verification(seed: int, cases: int, fixtures: Path | None = None) -> VerifyReport:
    """Run every randomized suite (``cases`` instances each) and fixture checks."""
    rng = random.Random(seed)
    report = VerifyReport()
    report.suites.append(_state_suite("p-conservation", lambda s: check_p_conservation(s, 5), rng, cases))
    report.suites.append(_state_suite("algorithm-equivalence", check_algorithms_agree, rng, cases))
    report.suites.append(_state_suite("reversibility", check_reversible, rng, cases))
    report.suites.append(_state_suite("box-label-evolution", check_box_label, rng, cases))
    report.suites.append(_state_suite("carrier-knuth", check_carrier_knuth, rng, cases))
    report.suites.append(
        _state_suite("q-evolution", check_q_evolution, rng, cases, positive_labels=True)
    )
    report.suites.append(
        _state_suite("reduction-commutation", check_reduction_commutes, rng, cases)
    )

    suite = SuiteResult("rsk-roundtrip")
    for _ in range(cases):
        if check_rsk_roundtrip(random_biword(rng)):
            suite.passed += 1
        else:
            suite.failed += 1
    report.suites.append(suite)

    suite = SuiteResult("q-independence")
    produced = 0
    while produced < cases:
        verdict = q_independence_instance(rng)
        if verdict is None:
            continue
        produced += 1
        if verdict:
            suite.passed += 1
        else:
            suite.failed += 1
    report.suites.append(suite)

    if fixtures is not None:
        for name, regenerate in FIXTURE_CHECKS.items():
            path = Path(fixtures) / name
            if not path.exists():
                continue
            suite = SuiteResult(f"fixture:{name}")
            if regenerate(path.read_text()):
                suite.passed += 1
            else:
                suite.failed += 1
            report.suites.append(suite)
    return report


# ---------------------------------------------------------------------------
# Golden fixture regeneration

def trajectory_block(
    s: State,
    history: int,
    future: int,
    span: tuple[int, int],
    now_index_prefixes: dict[int, str],
    pad: str = " " * 9,
) -> list[str]:
    """Timeline lines around a reference state, earliest first."""
    states = [s]
    for _ in range(history):
        states.insert(0, reverse_step(states[0]))
    for _ in range(future):
        states.append(original_step(states[-1]))
    lines = render_trajectory(states, "compact", span, anchor=False)
    return [now_index_prefixes.get(k, pad) + line for k, line in enumerate(lines)]


def _check_sec3_timeline(text: str) -> bool:
    s = parse_state("@1 234_15", colors=5)
    block = trajectory_block(
        s, history=4, future=5, span=(-18, 31),
        now_index_prefixes={4: "Time  t :", 5: "Time t+1:"},
    )
    return text.splitlines() == block


def _check_sec5_advanced_timeline(text: str) -> bool:
    s = parse_state("@1 ee5e1254ee312e45eeeeeeeeee", colors=5)
    block = trajectory_block(
        s, history=3, future=3, span=(-17, 36),
        now_index_prefixes={3: "Time  t :", 4: "Time t+1:"},
    )
    return text.splitlines() == block


def _check_one_step(text: str, notation: str) -> bool:
    lines = [line for line in text.splitlines() if line.strip()]
    before = parse_state(lines[0])
    after = original_step(before)
    if notation == "compact":
        rendered = render_state(after, "compact", (0, len(lines[0]) - 1), empty="e")
    else:
        rendered = render_state(after, "walled", (1, lines[0].count("|") - 1))
    return rendered == lines[1]


def _check_sec6_table(text: str) -> bool:
    lines = [line for line in text.splitlines() if line.strip()]
    start = parse_state(lines[0])
    states = evolve(start, len(lines) - 1)
    return render_trajectory(states, "walled") == lines


def _check_sec6_input(text: str) -> bool:
    """Deep check off the full-capacity input: label and tableau evolution."""
    start = parse_state(text.strip())
    states = evolve(start, 4)
    for before, after in zip(states, states[1:]):
        if box_label_step(before)[0] != box_label_sequence(after):
            return False
        if q_evolve(q_symbol(before), before.capacities) != q_symbol(after):
            return False
    reference = p_symbol(states[0])
    return all(p_symbol(x) == reference for x in states)


def _check_sec6_biwords(text: str, mirrored: bool) -> bool:
    blocks = [b for b in text.split("\n\n") if b.strip()]
    start = parse_state(_SEC6_INPUT)
    states = evolve(start, len(blocks) - 1)
    for s, block in zip(states, blocks):
        bw = state_to_biword(s)
        if mirrored:
            bw = dual(bw)
        if render_biword(bw) != block.strip("\n"):
            return False
    return True


def _check_sec6_p(text: str) -> bool:
    start = parse_state(_SEC6_INPUT)
    return render_tableau(p_symbol(start)) == text.strip("\n")


def _check_sec6_q(text: str) -> bool:
    blocks = [b for b in text.split("\n\n") if b.strip()]
    start = parse_state(_SEC6_INPUT)
    states = evolve(start, len(blocks) - 1)
    return [render_tableau(q_symbol(s)) for s in states] == [b.strip("\n") for b in blocks]


_SEC6_INPUT = (
    "|ee5|e125|4|ee3|12|e45|ee|e|eeeee|ee|e|eeeeee|eee|eeeeeeeeeeeeeee|eeeeeee|"
)

FIXTURE_CHECKS: dict[str, Callable[[str], bool]] = {
    "sec3_timeline.txt": _check_sec3_timeline,
    "sec5_advanced_timeline.txt": _check_sec5_advanced_timeline,
    "sec5_fig4_advanced.txt": lambda text: _check_one_step(text, "compact"),
    "sec5_fig5_generalized.txt": lambda text: _check_one_step(text, "walled"),
    "sec6_input.txt": _check_sec6_input,
    "sec6_table1.txt": _check_sec6_table,
    "sec6_biwords.txt": lambda text: _check_sec6_biwords(text, mirrored=False),
    "sec6_dual_biwords.txt": lambda text: _check_sec6_biwords(text, mirrored=True),
    "sec6_p_symbol.txt": _check_sec6_p,
    "sec6_q_symbols.txt": _check_sec6_q,
}

"""Text notations for box-ball states.

Compact notation (capacity-1 boxes only): one token per box, ``_`` or
``e`` for an empty box, a digit for the ball color.  When any color
exceeds 9 the tokens are whitespace-separated instead.  An optional
leading ``@<label>`` fixes the label of the first shown box (default 0).

Walled notation (arbitrary capacities): boxes delimited by ``|``, each
box a token string whose length is the box capacity, e.g. ``|ee5|e125|4|``.
The first shown box has label 1 unless ``@<label>`` is given; a trailing
``+<d>`` sets the capacity of every unlisted box (default 1).

Parsing canonicalizes (vacancies packed left, colors sorted); rendering
emits canonical text, so parse -> render is idempotent on text and
render -> parse recovers the state.  Only shown boxes carry their
capacities: to keep explicit capacities of boxes outside the occupied
range, render with a span that covers them.
"""

from __future__ import annotations

import re

from .bbs import CapacityProfile, State

_PREFIX = re.compile(r"^@(-?\d+)")


class StateParseError(ValueError):
    """Malformed state text; carries a human-readable position."""


def parse_state(text: str, colors: int | None = None) -> State:
    """Parse either notation; ``colors`` overrides the inferred color count."""
    body = text.strip()
    first_label: int | None = None
    m = _PREFIX.match(body)
    if m:
        first_label = int(m.group(1))
        body = body[m.end():]
        if body and not body.startswith("|"):
            if not body[0].isspace():
                raise StateParseError(f"expected whitespace or '|' after @{first_label}")
            body = body.lstrip()
    if not body:
        return State(0 if colors is None else colors, {})
    if body.startswith("|"):
        boxes, default = _split_walled(body)
        label0 = 1 if first_label is None else first_label
        caps = {label0 + k: len(tokens) for k, tokens in enumerate(boxes)}
        profile = CapacityProfile(caps, default)
        balls = {label0 + k: _box_colors(tokens, k) for k, tokens in enumerate(boxes)}
    else:
        profile = CapacityProfile()
        label0 = 0 if first_label is None else first_label
        tokens = body.split() if any(ch.isspace() for ch in body) else list(body)
        balls = {}
        for k, tok in enumerate(tokens):
            color = _token_color(tok, k)
            if color is not None:
                balls[label0 + k] = (color,)
    n = max((c for colors_ in balls.values() for c in colors_), default=0)
    if colors is not None:
        if n > colors:
            raise StateParseError(f"color {n} exceeds the declared color count {colors}")
        n = colors
    return State(n, balls, profile)


def _split_walled(body: str) -> tuple[list[list[str]], int]:
    default = 1
    plus = body.rfind("+")
    if plus > body.rfind("|"):
        try:
            default = int(body[plus + 1:])
        except ValueError:
            raise StateParseError(f"bad default capacity {body[plus + 1:]!r}") from None
        body = body[:plus].rstrip()
    if not body.endswith("|"):
        raise StateParseError("walled notation must end with '|'")
    segments = body[1:-1].split("|")
    boxes = []
    for k, seg in enumerate(segments):
        tokens = seg.split() if any(ch.isspace() for ch in seg) else list(seg)
        if not tokens:
            raise StateParseError(f"box {k + 1} of the walled text is zero-width")
        boxes.append(tokens)
    return boxes, default


def _box_colors(tokens: list[str], k: int) -> tuple[int, ...]:
    out = []
    for tok in tokens:
        color = _token_color(tok, k)
        if color is not None:
            out.append(color)
    return tuple(out)


def _token_color(tok: str, k: int) -> int | None:
    if tok in ("_", "e"):
        return None
    if not tok.isdigit() or int(tok) < 1:
        raise StateParseError(f"bad token {tok!r} in box {k + 1}")
    return int(tok)


def render_state(
    s: State,
    notation: str = "compact",
    span: tuple[int, int] | None = None,
    empty: str = "_",
    anchor: bool = True,
) -> str:
    """Canonical text for a state.

    ``span`` fixes the inclusive label range shown (default: the occupied
    range); ``empty`` picks the vacancy character for compact output;
    ``anchor=False`` drops the ``@<label>`` prefix (the text then re-parses
    at the notation's default first label).
    """
    if notation not in ("compact", "walled"):
        raise ValueError(f"unknown notation {notation!r}")
    if span is None:
        if s.is_empty():
            return ""
        span = (min(s.balls), max(s.balls))
    lo, hi = span
    if notation == "compact":
        return _render_compact(s, lo, hi, empty, anchor)
    return _render_walled(s, lo, hi, anchor)


def _render_compact(s: State, lo: int, hi: int, empty: str, anchor: bool) -> str:
    bad = [j for j in range(lo, hi + 1) if s.capacities.capacity(j) != 1]
    if bad:
        raise ValueError(f"compact notation needs capacity 1 everywhere, but box {bad[0]} differs")
    tokens = []
    for j in range(lo, hi + 1):
        colors = s.balls.get(j, ())
        tokens.append(str(colors[0]) if colors else empty)
    wide = s.n > 9
    body = (" " if wide else "").join(tokens)
    return body if lo == 0 or not anchor else f"@{lo} {body}"


def _render_walled(s: State, lo: int, hi: int, anchor: bool) -> str:
    parts = []
    for j in range(lo, hi + 1):
        colors = s.balls.get(j, ())
        cap = s.capacities.capacity(j)
        pad = ["e"] * (cap - len(colors))
        tokens = pad + [str(c) for c in colors]
        parts.append((" " if s.n > 9 else "").join(tokens))
    body = "|" + "|".join(parts) + "|"
    if s.capacities.default != 1:
        body += f"+{s.capacities.default}"
    return body if lo == 1 or not anchor else f"@{lo}{body}"


def render_trajectory(
    states: list[State],
    notation: str = "compact",
    span: tuple[int, int] | None = None,
    empty: str = "_",
    anchor: bool = True,
) -> list[str]:
    """Render states over a common label range (default: the union occupied range)."""
    if span is None:
        occupied = [j for s in states for j in s.balls]
        if not occupied:
            return ["" for _ in states]
        span = (min(occupied), max(occupied))
    return [render_state(s, notation, span, empty, anchor) for s in states]

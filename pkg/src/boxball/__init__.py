"""Box-ball systems and the tableau machinery that analyzes them.

The insertion tableau of a state's color word is conserved by the time
evolution, and the recording tableau of the box labels evolves on its
own by a carrier sweep; this package implements the states, the three
equivalent evolution algorithms, and the word/tableau toolkit they rest
on, with brute-force oracles and a CLI on top.
"""

from .bbs import (
    CapacityProfile,
    Carrier,
    LabelSequence,
    State,
    UNIT_CAPACITY,
    biword_to_state,
    box_label_sequence,
    box_label_step,
    carrier_pass,
    carrier_step,
    evolve,
    label_carrier,
    occupied_slots,
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
from .knuth import elementary_moves, knuth_equivalent, strip_largest
from .notation import StateParseError, parse_state, render_state, render_trajectory
from .rsk import (
    BiWord,
    EMPTY_BIWORD,
    IntegerMatrix,
    dual,
    inverse_rsk,
    make_biword,
    matrix_of,
    parse_biword,
    parse_matrix,
    render_biword,
    render_matrix,
    rsk,
    transpose,
)
from .tableau import (
    EMPTY_TABLEAU,
    Shape,
    Tableau,
    Word,
    as_word,
    is_tableau_word,
    parse_tableau,
    render_tableau,
    row_insert,
    shape,
    tab,
    tableau,
    word_of,
)

__all__ = [
    "BiWord",
    "CapacityProfile",
    "Carrier",
    "EMPTY_BIWORD",
    "EMPTY_TABLEAU",
    "IntegerMatrix",
    "LabelSequence",
    "Shape",
    "State",
    "StateParseError",
    "Tableau",
    "UNIT_CAPACITY",
    "Word",
    "as_word",
    "biword_to_state",
    "box_label_sequence",
    "box_label_step",
    "carrier_pass",
    "carrier_step",
    "dual",
    "elementary_moves",
    "evolve",
    "inverse_rsk",
    "is_tableau_word",
    "knuth_equivalent",
    "label_carrier",
    "make_biword",
    "matrix_of",
    "occupied_slots",
    "original_step",
    "p_symbol",
    "parse_biword",
    "parse_matrix",
    "parse_state",
    "parse_tableau",
    "q_evolve",
    "q_symbol",
    "reduce_advanced_to_standard",
    "reduce_generalized_to_advanced",
    "render_biword",
    "render_matrix",
    "render_state",
    "render_tableau",
    "render_trajectory",
    "reverse_step",
    "row_insert",
    "rsk",
    "shape",
    "slot_word",
    "state_to_biword",
    "strip_largest",
    "tab",
    "tableau",
    "transpose",
    "window",
    "word_of",
]

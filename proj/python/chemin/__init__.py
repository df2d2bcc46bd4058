"""Exact analysis of baccarat chemin de fer.

All probabilities and expectations are returned as ``fractions.Fraction``.
Table columns are Player's third card 0-9 followed by ``STAND``.
"""

from ._core import (
    STAND,
    DecisionTable,
    SimResult,
    StatTriple,
    banker_draw_ev,
    banker_stand_ev,
    bar_matrix,
    best_response_table,
    coup_stats,
    dormoy_unweighted_response,
    five_matrix,
    five_stats,
    historical_table,
    mixed_best_response,
    mod10,
    naive_average_ev,
    render_fraction,
    simulate,
    solve_2x2,
    third_card_pdf,
    two_card_pdf,
)

__all__ = [
    "STAND",
    "DecisionTable",
    "SimResult",
    "StatTriple",
    "banker_draw_ev",
    "banker_stand_ev",
    "bar_matrix",
    "best_response_table",
    "coup_stats",
    "dormoy_unweighted_response",
    "five_matrix",
    "five_stats",
    "historical_table",
    "mixed_best_response",
    "mod10",
    "naive_average_ev",
    "render_fraction",
    "simulate",
    "solve_2x2",
    "third_card_pdf",
    "two_card_pdf",
]

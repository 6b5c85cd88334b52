"""r-independence complexes of graphs: Betti tables, splittings, collapses."""

from ._rindep import (
    Graph,
    InconsistencyError,
    betti,
    closed_form_betti,
    collapse_certificate,
    ind_r,
    leray_number,
    run_corpus,
    split_tree,
    sr_generators,
    verify_certificate,
)


def regularity(table):
    """reg of the ideal from an R/I table: max(j - i + 1) over i >= 1; None for the zero ideal."""
    shifts = [j - i + 1 for (i, j) in table if i >= 1]
    return max(shifts) if shifts else None


__all__ = [
    "Graph",
    "InconsistencyError",
    "betti",
    "closed_form_betti",
    "collapse_certificate",
    "ind_r",
    "leray_number",
    "regularity",
    "run_corpus",
    "split_tree",
    "sr_generators",
    "verify_certificate",
]

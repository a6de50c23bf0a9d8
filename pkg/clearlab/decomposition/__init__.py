from .clear_decomp import (
    DecompositionCheck, IdealIdempotents, MatrixClearDecomposition, clear_decompose_full,
    diagonal_two_good_split, principal_ideal_idempotents, reduce_decomposition, unit_entry_clean_split,
    unit_regular_matrix_from_column, unit_regular_matrix_from_row, verify_clear_decomposition,
)

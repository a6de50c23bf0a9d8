from .normal_form import (
    FullnessVerdict, SmithForm, UnitDiagonalReduction, entry_gcd, fullness, reduce_full_to_unit_diag,
    smith_int, smith_normal_form,
)

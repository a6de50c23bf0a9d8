from .data_structures import (
    Element, Integers, MatrixRing, Modular, Product, RadicalReport, RingHandle, contains_integers, ring_size,
)
from .descriptor import parse_element, parse_ring
from .engine import (
    RingTables, check_ring_axioms, enumerate_elements, hom_image, image_ring, jacobson_radical, make_ring,
    require_finite, ring_tables,
)
from .errors import (
    BudgetExceededError, ClearLabError, ConfigError, DescriptorError, ImplicationViolationError,
    InfiniteRingError, NotFullError, RingMismatchError, UnsupportedRingError, UsageError, WitnessValidationError,
)

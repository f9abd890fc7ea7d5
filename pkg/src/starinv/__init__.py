"""Exact generalized inverses (inner, {1,3}, {1,4}, Moore-Penrose, group,
core, dual core, inverse along an element) in rings with involution, with an
executable checker for their equivalence theorems."""

from .errors import (
    ContextMismatch,
    NotCoreInvertible,
    NotDualCoreInvertible,
    NotEnumerable,
    NotGenInvertible,
    NotGroupInvertible,
    NotInIdeal,
    NotInvertible,
    NotMPInvertible,
    NotRegular,
    ParseError,
    RouteDisagreement,
    StarInvError,
    ValidationFailure,
)
from .fields import GaussianRationals, PrimeField, QuadraticField, Rationals, parse_field
from .inverses import (
    compute_portfolio,
    core_inverse,
    dual_core_inverse,
    group_inverse,
    inverse_along,
    mp_inverse,
    one_four_inverse,
    one_three_inverse,
)
from .lab import brute_force_oracle, random_element, sweep, verify_theorem
from .linalg import inner_inverse, invert, solve_left, solve_right
from .ring import (
    MatrixRing,
    ModularRing,
    RingElement,
    dumps_record,
    enumerate_ring,
    format_element,
    loads_record,
    parse_element,
    parse_ring,
    power,
    star,
)

__version__ = "0.1.0"

"""Gauss-diagram calculus of virtual knots: chord indices, r-coverings,
writhe polynomials, Reidemeister rewriting and covering-spectrum constructions."""
from .arithmetic import CoefficientTable, f_table, g_table, mertens, mobius, verify_tables
from .construct import (
    add_anklets_to_index,
    adjust_writhe,
    realize_single_covering,
    realize_spectrum,
    realize_spectrum_closed,
    realize_zero_covering,
    snail,
)
from .diagram import (
    ChordRecord,
    Endpoint,
    GaussDiagram,
    Kind,
    Role,
    closure,
    is_isomorphic,
    juxtapose,
    open_diagram,
    parse_diagram,
    serialize_diagram,
)
from .errors import (
    ArityError,
    GaussCoverError,
    GaussSyntaxError,
    InvalidMoveError,
    KindError,
    RealizabilityError,
    SignError,
    UnknownChordError,
)
from .invariants import (
    check_realizability,
    covering,
    index,
    indices,
    odd_writhe,
    writhe_polynomial,
    writhe_vector,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .moves import (
    EquivalenceVerdict,
    MoveKind,
    MoveSite,
    Verdict,
    apply_move,
    apply_moves,
    equivalent_bounded,
    find_moves,
    insertion_sites,
    random_move_walk,
    simplify,
)
from .polynomial import LaurentPolynomial, parse_polynomial

__version__ = "0.1.0"

"""Conversions between stabilizer codes over F_p and graphical quantum codes."""

from .enumerator import WeightEnumerator, macwilliams_dual, min_distance, to_gf4, weight_distribution
from .errors import GraphStabError, ParseError, ValidationError
from .gfp import ExtensionBasis, FpElem, flatten_vector, trace_gram
from .graphcode import (
    GraphCode,
    PhasedStabilizerGen,
    bilinear_form,
    flatten_graph,
    graph_to_stabilizer,
    pullback,
    quad_form,
    stabilizer_to_graph,
)
from .matfp import FpMatrix, kernel_basis, parity_check, row_space_contains, row_space_equal, rref
from .symplectic import (
    IsometryTranscript,
    SymplecticCode,
    SymplecticVector,
    apply_transcript,
    invert_transcript,
    self_dual_embed,
    standard_form,
    symp_dual,
    symp_inner,
)

__version__ = "0.1.0"

"""Betti numbers of Stanley-Reisner and face rings over colorful and universal parameters."""
from .catalog import full_catalog, parse_spec
from .cohomology import is_cohen_macaulay, poset_is_cohen_macaulay, reduced_cohomology
from .complex import Coloring, ColoringError, SimplicialComplex, restrict_colors
from .conjecture import ConjectureReport, batch, check_conjecture
from .depth import DepthReport, depth_ab, depth_duval, depth_regseq, depth_report
from .facering import FaceRing, face_ring, straighten
from .flagvec import flag_f, flag_h, hilbert_numerator_face_ring, hilbert_numerator_sr
from .koszul import (
    BettiTable,
    euler_consistency,
    gamma_tor_hochster,
    gamma_tor_strand,
    specialize_multigraded,
    theta_tor,
)
from .linalg import QQ, ExactField, SparseMatrix, rank
from .poset import InvalidPosetError, SimplicialPoset, barycentric_subdivision, from_facets, validate
from .render import render_betti

__version__ = "0.1.0"

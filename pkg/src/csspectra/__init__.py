"""Exact SU(2) Chern-Simons spectra of Seifert homology spheres and lens
spaces, 2-knot spectra, and obstruction verdicts built on them."""

from .ratmod1 import (
    Mod1Rational, Spectrum, SpectrumKind, normalize_mod1, mirror_value,
    mirror_spectrum, spectrum_union,
)
from .seifert import (
    SeifertData, RotationNumbers, FlatComponent, seifert_data,
    product_angle_interval, exists_representation, enumerate_components,
)
from .spectra import (
    InvariantRecord, cs_value, floer_index, r_invariant, seifert_record,
    lens_spectrum, square_condition, connected_sum_spectrum,
    l_connected_sum_bound, l_refined_connected_sum_bound,
)
from .knot2 import parse_knot, format_knot, knot_spectrum, check_j_monotonicity
from .obstruct import (
    Brieskorn, MirrorBrieskorn, ConnSumY, parse_y, format_y, load_table,
    lookup_invariants, check_seifert_hypersurface, check_ribbon_obstruction,
    check_embedding_negative_definite, rigid_spectrum, q_rigidity,
    mapping_torus_spectrum, rs_connected_sum_lower_bound,
)

__version__ = "0.1.0"

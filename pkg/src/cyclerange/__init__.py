"""Numerical ranges of weighted cyclic shift matrices.

``S(a_1, ..., a_n)`` carries ``a_j`` at ``(j, j+1)`` and ``a_n`` at ``(n, 1)``.
Its numerical range is determined by ``lambda_1(Re(e^{i theta} S))``, the top
root of ``f(z) - 2 prod(a) cos(n theta)`` halved, and everything here is built
on that one-parameter polynomial family.
"""

from .boundary import BoundaryCurve, export_curve, load_curve, sample_boundary
from .charpoly import CharPolyFamily, ImagSpectrum, build_family, imag_part_spectrum
from .errors import (
    NoRealRoot,
    PreconditionError,
    UnsupportedParity,
    UnsupportedSize,
    ValidationError,
)
from .extremal import (
    DoubleEigenResult,
    ExtremalReport,
    find_double_eigenvalue,
    min_frobenius_zero_product,
    min_path_weights,
    regular_ngon_check,
)
from .inclusion import (
    CubicComparison,
    CubicTriple,
    InclusionVerdict,
    Verdict,
    compare_cubic,
    includes,
    includes_closed_form,
    includes_general,
    includes_polynomial,
)
from .permsearch import (
    ClassTable,
    cyclic_sum,
    enumerate_classes,
    family_analysis_n6,
    find_extreme,
    verify_conjecture1,
)
from .spectra import dense_oracle, largest_root, numerical_radius, support_max, support_profile
from .weights import (
    DihedralClass,
    PhaseReduction,
    RDecomposition,
    WeightVector,
    canonical_dihedral,
    from_r,
    normalize_complex,
    parse_weights,
    r_decomposition,
)

__version__ = "0.1.0"

"""C-, S- and E-orbit-function transforms on the fundamental regions of compact simple Lie groups."""

from .lattice import (
    EvenGridPoint,
    GridPoint,
    SpectrumError,
    SpectrumSet,
    enumerate_grid,
    enumerate_grid_even,
    enumerate_spectrum,
    grid_weight,
    greedy_spectrum,
    sample_points,
    sample_weights,
)
from .orbitfunc import Kind, eval_C, eval_E, eval_S, eval_orbit_function, evaluate, evaluate_lattice
from .rootdata import GroupType, RootSystem, build_root_system, orthogonal_simple_roots, pairing, root_system
from .transforms import (
    Decomposition,
    SampleField,
    Spectrum,
    basis_field,
    decompose_product,
    forward,
    gram_matrix,
    inverse,
    make_field,
    make_spectrum,
    norm_table,
    quad_orthogonality,
    sample_function,
    synthesize,
    synthesize_many,
    unit_spectrum,
)
from .weyl import dominant_representative, even_representative, orbit, orbit_even, reflect_copoint, reflect_simple

__version__ = "0.1.0"

"""Moment complexes and moment measures for torus actions on projective space."""

from .errors import (ConePreconditionError, InputError, MomentError,
                     PreconditionError, ResourceLimitError)
from .lattice import Character, Cocharacter, IntegerMatrix, pair, smith_normal_form, torsion_order
from .polyhedral import (Cone, Polytope, Subdivision, enumerate_subdivisions, is_subdivision,
                         regular_subdivision, triangulate_cone, vertex_set)
from .moment_complex import (Cell, Limits, MomentComplex, WeightConfiguration,
                             abstract_complex, build_complex, cell_of_support,
                             orbit_closure_cells)
from .measures import (MomentMeasure, enumerate_measures, git_measure, is_geometric,
                       u_supports, validate)
from .poly import SymPolynomial, char_to_linear
from .equivariant import (Fingerprint, cell_fingerprint, cone_class, simplicial_cone_class,
                          support_class, verify_fan_vanishing, verify_fingerprint_additivity)

__version__ = "0.1.0"

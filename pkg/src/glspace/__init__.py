"""Exact polyhedral normed spaces: plump faces, GL-spaces and absolute sums."""
from .errors import (DimensionError, FunctionalNotNorming, GeometryError, GlspaceError,
                     InputError, NotAbsolute, ParseError, PreconditionError, SymmetryError,
                     TheoremViolation, UnsupportedDimension)
from .rational import Rational, Vector, to_rational
from .lp import LpOutcome, LpProblem, Status, solve_lp, verify_outcome
from .polytope import (Facet, GeneralPolytope, SymmetricPolytope, contains, difference_body,
                       facets_of, from_halfspaces, from_vertices, hyperplane_section,
                       minkowski_sum, polar_dual, volume)
from .normed_space import (PolyhedralSpace, dist_point_to_polytope, face_of_functional,
                           hausdorff_distance, norm_eval)
from .gl_analysis import (GlVerdict, PlumpnessReport, difference_body_check, is_gl,
                          is_plump_facet, rogers_shephard_audit)
from .planar import (LambdaHexagon, PlanarClass, PlanarTag, classify_2d, property_a_probe,
                     segment_census)
from .abs_sums import (AbsoluteNormSpace, GlmVerdict, SumSpace, build_e_sum, compose_sum_face,
                       cross_validate, extended_z_probe, is_gl_respecting, is_glm,
                       is_monotone_plump, validate_absolute)
from .corpus import CorpusSpec, fixture, generate, random_symmetric_polygon
from .polyfile import emit, parse

__version__ = "0.1.0"

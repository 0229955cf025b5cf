"""Exact computations for rank-2 bundles on P^2 with Chern classes (2, 2).

Four sections of the bundle give a morphism P^2 -> Gr(2, 4) in P^5; the
package computes its Plücker quadrics, implicitizes and classifies the
image, and checks projections of the Veronese surface.
"""

from .poly import GREVLEX, LEX, MonomialOrder, Poly, Ring, ring, substitute, jacobian_matrix, poly_mul
from .parse import ParseError, UnknownIdentifier, parse_poly
from .linalg import RatMatrix, kernel, quadratic_form_matrix, rref
from .groebner import (HilbertData, Ideal, ResourceLimitExceeded, collect_stats, eliminate,
                       groebner_basis, hilbert_data, ideal_equal, intersect, irrelevant_ideal,
                       is_empty_projective, minimal_generators, normal_form, resource_limit,
                       saturate)
from .bundle import (P2, ChernPair, CommonZero, DegreeMismatch, Presentation, SectionE,
                     chern_of_cokernel, make_presentation, section_basis, section_combine,
                     standard_presentation)
from .plucker import (P5, DependentSections, PluckerMap, SectionQuadruple, generates_check,
                      grassmann_relation, normalize_sections, plucker_identity, plucker_map,
                      wedge_quadric)
from .imageclass import (CaseReport, NotGenerating, SingularLocus, classify, differential_at,
                         fiber_length, image_degree, implicitize, map_degree, quadric_span,
                         singular_locus)
from .pencil import (QuadricPencil, RankStratum, image_pencil, pencil_determinant,
                     pencil_from_forms, pencil_generic_rank, rank_strata)
from .veronese import (ConicPoint, SecantLine, conic_rank, project_from_line, project_from_point,
                       secant_cubic, secant_line, special_line, veronese_map, verify_line_remark,
                       verify_point_remark)
from .pipeline import JobSpec, build_report

__version__ = "0.1.0"

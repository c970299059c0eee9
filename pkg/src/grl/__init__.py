"""Exact computation with group-graded rings.

Verification toolkit for support-group claims about central idempotents:
graded algebras over exact fields (Q, F_p), group rings and crossed
products, Dorroh unitization and regrading constructions, complete
central-idempotent enumeration, and a claim-checking harness with a CLI.
"""
from .coeff import (RATIONALS, Algebra, AlgebraError, FieldError, PrimeField,
                    RationalField, group_algebra, make_algebra, matrix_algebra,
                    parse_field, product_algebra, truncated_polynomial_algebra)
from .constructions import (DegreeOutsideMonoidError, DorrohElement, DorrohRing,
                            PhiEmbedding, dorroh_unitize, embed_into_group_ring,
                            regrade_by_quotient, regrade_from_monoid,
                            restrict_to_subgroup)
from .graded import (BudgetExceededError, ConditionCheck, EnumerationUnsupportedError,
                     GradedAlgebra, GradedElement, GradingError, NonDegeneracyCheck,
                     PrimenessCheck, StrongGradingCheck, central_idempotents,
                     check_condition, check_non_degenerate, check_strongly_graded,
                     is_s_unital, make_graded, principal_primeness)
from .groups import (DihedralElement, ExceedsCap, FiniteTableGroup, FreeAbelianGroup,
                     Group, GroupError, InfiniteDihedralGroup, NotNormalError,
                     NotSubgroupError, builtin_group, conjugacy_class, cyclic_group,
                     dihedral_group, element_order, klein_four_group, quotient_group,
                     subgroup_closure, symmetric_group_s3, validate_subgroup)
from .group_ring import (CrossedProductError, GroupRing, GroupRingElement,
                         InfiniteGroupError, NotUnitalError, crossed_product,
                         gr_is_central, gr_is_idempotent, gr_mul, gr_support_group,
                         group_ring)
from .fixtures import (FIXTURES, FactResult, FixtureReport, UnknownFixtureError,
                       build_fixture, run_all_fixtures, run_fixture)
from .harness import (CLAIMS, DEFAULT_BUDGET, DEFAULT_CAP, SweepConfig, SweepReport,
                      VerificationReport, corpus_sweep, exit_code, report_json,
                      verify_graded, verify_instance)
from .instances import (Instance, InstanceFormatError, load_instance, parse_group,
                        parse_instance)

__version__ = "0.1.0"

"""Topological minors of rooted trees, finite and finitely presented infinite."""

__version__ = "0.1.0"

from .embed import (
    EmbeddingWitness,
    brute_force_minor,
    check_witness,
    rooted_minor,
    rooted_minor_witness,
    topo_equiv,
    unrooted_minor,
)
from .errors import ArgumentError, ParseError, ResourceError, TopoMinorError, UnsupportedError
from .finite_tree import (
    VERTEX,
    FiniteTree,
    all_rootings,
    canonical_code,
    collapse,
    complete_binary,
    enumerate_rooted_trees,
    from_parens,
    from_parents,
    is_isomorphic,
    path,
    random_tree,
    reroot,
    star,
    subdivide,
    to_parens,
)
from .natseq import PeriodicNat, PrimePowers
from .ordinal import OMEGA, Ordinal, compare, fundamental, is_limit, ord_max, parse_ordinal, succ, to_text
from .seq_order import EPSeq, equiv_star, leq_star, leq_star_result, normalize, t_f_truncate
from .spined import (
    Fin,
    OrdinalRamp,
    Periodic,
    RayDescriptor,
    SOrd,
    Spine,
    Verdict,
    VRamp,
    build_s,
    classify,
    make_comb,
    maximal_rays,
    order,
    spined_equiv,
    spined_minor,
    spined_minor_result,
    t_star,
    truncate,
)
from .family import (
    IsoVerdict,
    Order1Form,
    check_ray_conditions,
    collapse_presentation,
    family_generate,
    order1_canonical,
    presentation_iso,
    reroot_invariance_check,
    s_f,
    verify_iso_certificate,
)
from .dsl import evaluate, parse, parse_value, print_expr, to_expr
from .render import emit_dot

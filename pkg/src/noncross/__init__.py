"""Symmetric maximal noncrossing collections of k-element subsets of [n].

Construction (staged, for n = d*k and in general), verification via the
cardinality criterion, exhaustive enumeration over shift orbits, and the
planar complex / quiver-with-potential attached to a collection.
"""

from .construct import (
    ConditionNotSatisfied,
    ConditionReport,
    InvalidClassOrder,
    build_stage,
    condition_star,
    construct_dk,
    construct_dk_detailed,
    construct_general,
    construct_general_detailed,
    minimal_h,
    orbit_of,
    relabel_F,
)
from .crossing import (
    Collection,
    all_noncrossing,
    complement_collection,
    crossing,
    find_crossing_pair,
    is_symmetric,
    orbit,
)
from .cyclic import (
    MAX_N,
    InvalidRange,
    MemberNotInSubset,
    SubOrder,
    add_mod,
    cyclic_intervals,
    index_set,
    shift_set,
)
from .enumeration import (
    OrbitAtlas,
    build_atlas,
    build_compatibility_graph,
    enumerate_symmetric_maximal,
    existence_table,
)
from .files import load_collection, save_collection
from .plabic import (
    EmbeddedComplex,
    QuiverWithPotential,
    build_complex,
    embed,
    export,
    jacobian_quiver,
    nakayama,
    orient,
)
from .verify import CapExceeded, VerifyReport, inclusion_maximal_bruteforce, verify

__version__ = "0.1.0"

__all__ = [
    "MAX_N",
    "CapExceeded",
    "Collection",
    "ConditionNotSatisfied",
    "ConditionReport",
    "EmbeddedComplex",
    "InvalidClassOrder",
    "InvalidRange",
    "MemberNotInSubset",
    "OrbitAtlas",
    "QuiverWithPotential",
    "SubOrder",
    "VerifyReport",
    "add_mod",
    "all_noncrossing",
    "build_atlas",
    "build_compatibility_graph",
    "build_complex",
    "build_stage",
    "complement_collection",
    "condition_star",
    "construct_dk",
    "construct_dk_detailed",
    "construct_general",
    "construct_general_detailed",
    "crossing",
    "cyclic_intervals",
    "embed",
    "enumerate_symmetric_maximal",
    "existence_table",
    "export",
    "find_crossing_pair",
    "index_set",
    "inclusion_maximal_bruteforce",
    "is_symmetric",
    "jacobian_quiver",
    "load_collection",
    "minimal_h",
    "nakayama",
    "orbit",
    "orbit_of",
    "orient",
    "relabel_F",
    "save_collection",
    "shift_set",
    "verify",
]

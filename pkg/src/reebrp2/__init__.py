"""Reeb graphs of simple Morse functions on the projective plane.

Counting (:mod:`~reebrp2.count`), exhaustive enumeration
(:mod:`~reebrp2.enumeration`), canonical forms and isomorphism
(:mod:`~reebrp2.canonical`), structural validation
(:mod:`~reebrp2.validate`) and file formats (:mod:`~reebrp2.formats`).
"""

from .canonical import (
    encode,
    encode_full,
    encode_rooted,
    full_from_explicit,
    is_isomorphic,
    parse,
    parse_full,
    parse_rooted,
)
from .core import (
    ExplicitGraph,
    FullReebGraph,
    RootedReebTree,
    attach_mixed,
    attach_up_up,
    glue,
    leaf,
    leaf_count,
    reverse,
    saddle_count,
    to_explicit,
)
from .count import K, N, table
from .enumeration import enum_full, enum_rooted
from .errors import (
    InvalidStructureError,
    MutationInapplicable,
    ParseError,
    ReebError,
    ResourceLimitError,
)
from .formats import format_edgelist, parse_edgelist, to_dot
from .validate import ValidationReport, check_theorem1, mutate_for_tests

__version__ = "0.1.0"

"""Well-quasi-order workbench: tree and sequence orders, order types, ordinal notations."""

from .ordinals import Ordinal, parse_ordinal
from .qo import QO, closure, chain, antichain, named_qo, load_qo, otype, height, width
from .trees import Leaf, Node, le_t, le_k, parse_tree, format_tree, g_type
from .sequences import embeds, parse_seq, format_seq
from .correspondence import tree_to_seq, seq_to_tree, check_equivalence

__version__ = "0.1.0"

__all__ = [
    "Ordinal",
    "parse_ordinal",
    "QO",
    "closure",
    "chain",
    "antichain",
    "named_qo",
    "load_qo",
    "otype",
    "height",
    "width",
    "Leaf",
    "Node",
    "le_t",
    "le_k",
    "parse_tree",
    "format_tree",
    "g_type",
    "embeds",
    "parse_seq",
    "format_seq",
    "tree_to_seq",
    "seq_to_tree",
    "check_equivalence",
]

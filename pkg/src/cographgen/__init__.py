"""Enumerate unlabeled cographs on n vertices with linear delay.

Cographs are generated through their cotrees: every tree with n leaves
whose internal nodes have at least two children, taken in a fixed total
order, yields one disconnected and one connected cograph.
"""
from .cotree import Cotree, ParseError, ValidationError, compare_nodes, compare_trees, min_tree, parse, serialize
from .generator import CographHandle, GeneratorState, cographs, count, next_cograph, start, trees
from .graphout import SimpleGraph, materialize, to_dot, to_edgelist, to_graph6
from .partitions import Ordering, UsageError, next_partition
from .successor import find_pivot, next_tree, rebuild_node

__all__ = [
    "CographHandle", "Cotree", "GeneratorState", "Ordering", "ParseError", "SimpleGraph", "UsageError",
    "ValidationError", "cographs", "compare_nodes", "compare_trees", "count", "find_pivot", "materialize",
    "min_tree", "next_cograph", "next_partition", "next_tree", "parse", "rebuild_node", "serialize", "start",
    "to_dot", "to_edgelist", "to_graph6", "trees",
]

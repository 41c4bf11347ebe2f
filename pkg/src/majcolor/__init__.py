"""Majority and rank-bounded list colorings of digraphs."""

from .baselines import (greedy_acyclic_2color, lovasz_kcolor, lovasz_list_best_effort,
                        split_product_4color)
from .engine import (assert_star_preserved, build_majority4_instance, build_twothirds3_instance,
                     check_feasibility, color_with_ranks)
from .exceptions import (CyclicGraphError, EngineInvariantError, InfeasibleInstanceError,
                         InstanceFormatError, OracleBudgetExceeded, RankOverflowError)
from .generators import (gen_random_dag, gen_random_digraph, gen_random_graph, gen_random_lists,
                         gen_random_tournament)
from .graph import Digraph, UndirectedGraph, topological_order
from .instance import ListInstance, RankedInstance
from .io import format_coloring, format_instance, parse_coloring, parse_instance
from .oracle import (FractionConstraint, RankConstraint, count_valid_colorings,
                     exhaustive_list_coloring, search_majority3_counterexample)
from .verify import verify_majority_fraction, verify_rank_coloring, verify_undirected_fraction

__version__ = "0.1.0"

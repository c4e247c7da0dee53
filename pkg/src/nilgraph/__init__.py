"""Nilpotentizers, class predicates and non-nilpotent graphs of finite groups."""

from .analysis import (DEFAULT_CORPUS, CorpusEntry, GroupAnalysis, GroupReport, analyze,
                       default_corpus, default_entries, load_corpus_config)
from .claims import CLAIMS, SuiteResult, run_suite
from .classify import (ClassProfile, class_profile, is_ac_group, is_e_group, is_ep_group,
                       is_n_group, is_np_group, is_simple, is_sn_group, is_snp_group,
                       is_solvable, quotient, sylow_subgroup)
from .errors import (CapExceeded, CliqueTimeout, EmptySet, MalformedTable, NilgraphError,
                     NotAGroup, NotASubgroup, NotNormal, PrimeNotDividing, UnknownFamily)
from .families import builtin, direct_product, psl2
from .graph import (GraphMetrics, NnGraph, build_full_graph, build_reduced_graph, clique_number,
                    diameter, export_dot, girth, graph_metrics, is_planar, maximum_clique, to_dot)
from .groups import (ElementSet, FiniteGroup, from_cayley_table, from_permutation_generators,
                     parse_cycles, read_cayley_file, read_permutation_file)
from .nilpotentizer import NilTable, nil_of_group, nil_table, nilpotentizer, nilpotentizer_of_set
from .series import (engel_set, hypercenter, is_nilpotent, lower_central_series, nilpotency_class,
                     right_engel_set, subnormalizer, upper_central_series)

__version__ = "0.1.0"

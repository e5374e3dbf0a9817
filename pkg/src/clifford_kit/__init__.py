"""Finite Clifford semigroups: structure, embeddings and subinvariant metrics."""
from .catalog import build
from .constructions import (chain, cone, cyclic_group, diamond, direct_product, klein_group,
                            reduced_product, symmetric_group, two, zero_extension)
from .embeddings import classify_embeddability, h_A, pi_hat_h_AA
from .errors import CliffordKitError
from .homs import Homomorphism, canonical_map, enumerate_homs, is_homomorphism
from .metrics import (MetricMatrix, check_metric_flags, cone_metric, refute_example64,
                      subinvariant_closure, verify_cone_metric)
from .order import enumerate_ideals, natural_order
from .semigroup import (FiniteSemigroup, classify, clifford_structure, maximal_subgroups,
                        parse_table, format_table)

__all__ = [
    "CliffordKitError", "FiniteSemigroup", "Homomorphism", "MetricMatrix", "build",
    "canonical_map", "chain", "check_metric_flags", "classify",
    "classify_embeddability", "clifford_structure", "cone", "cone_metric", "cyclic_group",
    "diamond", "direct_product", "enumerate_homs", "enumerate_ideals", "format_table",
    "h_A", "is_homomorphism", "klein_group", "maximal_subgroups", "natural_order",
    "parse_table", "pi_hat_h_AA", "reduced_product", "refute_example64",
    "subinvariant_closure", "symmetric_group", "two", "verify_cone_metric",
    "zero_extension",
]

__version__ = "0.1.0"

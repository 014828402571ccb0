"""Community detection: Girvan-Newman, Fiedler bisection, partition comparison."""

from .girvan_newman import GNDendrogram, GNSplit, edge_betweenness, girvan_newman
from .partition import (
    Partition,
    PartitionComparison,
    compare_partitions,
    hub_community,
    modularity,
)
from .spectral import SpectralBisection, fiedler_bisection, laplacian

__all__ = [
    "GNDendrogram",
    "GNSplit",
    "Partition",
    "PartitionComparison",
    "SpectralBisection",
    "compare_partitions",
    "edge_betweenness",
    "fiedler_bisection",
    "girvan_newman",
    "hub_community",
    "laplacian",
    "modularity",
]

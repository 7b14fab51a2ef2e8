"""Silhouette community detection: embed, cluster, keep the best-separated k."""

from ._core import (
    ConfigError,
    DataError,
    Graph,
    __version__,
    ari,
    detect,
    gamma_estimate,
    generate_lfr,
    kmeans,
    label_propagation,
    louvain,
    modularity,
    netmf_embed,
    netmf_target,
    nmi,
    ppr_embed,
    ppr_vector,
    set_num_threads,
    silhouette,
    silhouette_samples,
    valid_range,
)

__all__ = [
    "ConfigError",
    "DataError",
    "Graph",
    "__version__",
    "ari",
    "detect",
    "gamma_estimate",
    "generate_lfr",
    "kmeans",
    "label_propagation",
    "louvain",
    "modularity",
    "netmf_embed",
    "netmf_target",
    "nmi",
    "ppr_embed",
    "ppr_vector",
    "set_num_threads",
    "silhouette",
    "silhouette_samples",
    "valid_range",
]

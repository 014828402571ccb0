"""Network analyses: centrality, communities, cliques and degree statistics."""

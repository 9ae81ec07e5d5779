"""
Services: exact geometry, subdivisions, Lafforgue facets, monotone paths,
A_n combinatorics and the monodromy lab.
"""

"""
Semi-transitive orientation engine.

Decides semi-transitive orientability of small graphs, executes the
orientation preserving operations (edge deletion, addition, lifting and
subdivision) as certified pipelines, builds graph products and odd-girth
constructions, and runs the small-graph census.
"""

__version__ = "0.1.0"

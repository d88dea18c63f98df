"""Combinatorial and numerical companions to ansular functors: graph categories,
the dihedral category, Grothendieck-Verdier fusion data, handlebody block
dimensions and the solid-torus mapping class action."""

__version__ = "0.1.0"

"""Computations with modules over bound quiver algebras.

This app holds the library (``exactlin``, ``quiver``, ``rep``, ``homology``,
``subcat``, ``recollement``, ``thickmaps``, ``silting``) and the management
commands that drive it. See the readme for the command-line surface.

"""

"""tripatch: exact patchworking of real trigonal curves.

Validation of trigonal patchworks, the pencil scan order, combinatorial
sign arrays, signed real rational graph skeletons with their assembly,
and an exact convex-case oracle used as independent ground truth.
"""

__version__ = "0.1.0"

"""Non-ambiguous trees: enumeration, hook formulas, q-analogues, bijections,
generating functions and the (d, k) generalisation.

Submodules: ``trees``, ``nat``, ``perm``, ``qhook``, ``bijections``,
``series``, ``natdk``, ``render``, ``verify`` and the ``cli`` front end.
"""

__version__ = "0.1.0"

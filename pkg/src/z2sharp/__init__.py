"""A workbench for paraconsistent second-order arithmetic.

Subpackages: ``syntax`` (language, parser, Gödel codes), ``truth`` (the
ranked truth lattice), ``model`` (finite structures and evaluation),
``axioms`` (schema catalog and soundness checks), ``numbers`` (the flavored
number tower), ``diagonal`` (Berry and Richard) and ``cli``.
"""

__version__ = "0.1.0"

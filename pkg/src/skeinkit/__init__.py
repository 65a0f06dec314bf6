"""Skein-theoretic link invariants and the algebras around them.

Diagrams come in as PD codes; the Kauffman bracket, Jones, Homflypt and
Conway polynomials, Fox colorings and Vassiliev differences are computed
exactly over Laurent polynomials with integer coefficients.  Alongside sit
the Temperley-Lieb algebras, the skein algebra of the punctured torus,
framed permutations with the type-A Hecke algebra, and a calculator for the
second skein module built on the Smith normal form.

The functions ``bracket``, ``homflypt`` and ``diagram`` live in the
submodules of the same name and are not re-exported here.
"""

from __future__ import annotations

from .bracket import EMPTY_LINK, framed_invariant, jones, to_t
from .colorings import col3_jones_check, count_colorings
from .diagram import (DiagramError, LinkDiagram, PdCode, PdSyntaxError, mirror, parse_pd,
                      switch_crossing, validate, writhe)
from .homflypt import conway, jones_from_homflypt, vassiliev_difference
from .kernels import BACKEND_NAME
from .poly import LaurentPoly

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "DiagramError",
    "EMPTY_LINK",
    "LaurentPoly",
    "LinkDiagram",
    "PdCode",
    "PdSyntaxError",
    "col3_jones_check",
    "conway",
    "count_colorings",
    "framed_invariant",
    "jones",
    "jones_from_homflypt",
    "mirror",
    "parse_pd",
    "switch_crossing",
    "to_t",
    "validate",
    "vassiliev_difference",
    "writhe",
]

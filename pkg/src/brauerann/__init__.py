"""Exact computations in Brauer algebras, symmetric group algebras and the
tensor-space representation of B_n(m)."""

__version__ = "0.1.0"

from .algebra import AlgebraElement, E_element, E_i, b_element, multiply, standard_pairing
from .diagram import BrauerDiagram, concat, enumerate_diagrams, normal_form, sign
from .ideals import BrauerAmbient, SymmetricAmbient, ideal_equals, two_sided_closure
from .rings import GF, QQ, ZZ, ZZx, field_for
from .symgroup import StandardTableau, hook_dim, kernel_index_count, std_tableaux
from .tensor import act_element, kernel

__all__ = [
    "AlgebraElement", "BrauerAmbient", "BrauerDiagram", "E_element", "E_i", "GF", "QQ",
    "StandardTableau", "SymmetricAmbient", "ZZ", "ZZx", "act_element", "b_element", "concat",
    "enumerate_diagrams", "field_for", "hook_dim", "ideal_equals", "kernel", "kernel_index_count",
    "multiply", "normal_form", "sign", "standard_pairing", "std_tableaux", "two_sided_closure",
]

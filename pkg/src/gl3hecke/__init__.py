"""Pro-p Iwahori invariants of compactly induced GL_3 representations.

Lattice combinatorics of the regions S_w, presentations of the Iwahori-Hecke
algebras in the three character cases, their closed-form action on the basis
f_{w,a}, windowed submodule linear algebra over F_p, and a brute-force oracle
in GL_3(F_q((t))).
"""

from .action import BasisFunction, ModuleVector, WeightConfig, act_word, composite_table
from .explorer import corollary_certificate, find_transporter, span_closure
from .hecke import CharacterCase, HeckeElement, OperatorWord, normalize, parse_word
from .lattice import WeylElem, WindowSpec, classify, entry_exponent, is_proper, partition_window, s_omega_contains

__version__ = "0.1.0"

__all__ = [
    "BasisFunction",
    "CharacterCase",
    "HeckeElement",
    "ModuleVector",
    "OperatorWord",
    "WeightConfig",
    "WeylElem",
    "WindowSpec",
    "act_word",
    "classify",
    "composite_table",
    "corollary_certificate",
    "entry_exponent",
    "find_transporter",
    "is_proper",
    "normalize",
    "parse_word",
    "partition_window",
    "s_omega_contains",
    "span_closure",
]

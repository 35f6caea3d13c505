"""Division by two, constructively.

Subpackages cover the two-sided binary sequences and their extended-integer
classification (`sequences`), the infinite dihedral group and its actions
(`dihedral`), the explicit even/odd pairing family (`theta`), the finite
choice-free divider (`divider`), and the local-rule counterexample machinery
(`localrules`).
"""

from . import dihedral, divider, localrules, sequences, theta
from .dihedral import IDENTITY, R, T, DihedralElt, ParityPoint
from .divider import (
    CopyElem,
    FinInstance,
    InstanceError,
    chi_trace,
    divide,
    theta_cyclic_instance,
    verify_matching,
)
from .localrules import (
    LinearTail,
    LocalRule,
    SearchReport,
    WindowPattern,
    bijectivity_witness,
    eventually_linear,
    exhaustive_search,
    naive_family_witness,
    parity_counts,
    r_equivariance_witness,
)
from .sequences import MINUS_INF, PLUS_INF, BiSeq, ZInf, embed, fin

__all__ = [
    "BiSeq",
    "CopyElem",
    "DihedralElt",
    "FinInstance",
    "IDENTITY",
    "InstanceError",
    "LinearTail",
    "LocalRule",
    "MINUS_INF",
    "PLUS_INF",
    "ParityPoint",
    "R",
    "SearchReport",
    "T",
    "WindowPattern",
    "ZInf",
    "bijectivity_witness",
    "chi_trace",
    "dihedral",
    "divide",
    "divider",
    "embed",
    "eventually_linear",
    "exhaustive_search",
    "fin",
    "localrules",
    "naive_family_witness",
    "parity_counts",
    "r_equivariance_witness",
    "sequences",
    "theta",
    "theta_cyclic_instance",
    "verify_matching",
]

"""Exact combinatorics of enriched partitions on DAGs and toric classes.

Permutation statistics, (cyclic) quasi-symmetric functions, toric DAG
machinery, weight enumerators, peak functions and order polynomials, all
in exact integer arithmetic.
"""

from .dag import (
    Dag,
    ToricClass,
    disjoint_union,
    flip,
    is_toric_poset,
    is_toric_transitive,
    linear_extensions,
    toric_class,
    toric_extensions,
    transitive_closure,
)
from .enriched import (
    cyclic_peak_product,
    delta_dag,
    delta_perm,
    delta_toric,
    enumerate_enriched,
    enumerate_enriched_toric,
    is_enriched,
    k_peak,
    kcyc,
)
from .orderpoly import (
    Marking,
    RunDecomposition,
    enumerate_markings,
    gf_omega,
    gf_omega_cyc,
    omega,
    omega_cyc,
    omega_dag,
    omega_toric,
    partition_to_marking,
    runs,
)
from .permstat import (
    canonical_rotation,
    cdes_set,
    cpeak_set,
    des_set,
    peak_set,
    rotations,
)
from .qsym import (
    CQSym,
    NotCyclicError,
    QSym,
    cyclic_fundamental,
    cyclic_monomial,
    from_qsym,
    fundamental,
    monomial,
)

__all__ = [
    "CQSym",
    "Dag",
    "Marking",
    "NotCyclicError",
    "QSym",
    "RunDecomposition",
    "ToricClass",
    "canonical_rotation",
    "cdes_set",
    "cpeak_set",
    "cyclic_fundamental",
    "cyclic_monomial",
    "cyclic_peak_product",
    "delta_dag",
    "delta_perm",
    "delta_toric",
    "des_set",
    "disjoint_union",
    "enumerate_enriched",
    "enumerate_enriched_toric",
    "enumerate_markings",
    "flip",
    "from_qsym",
    "fundamental",
    "gf_omega",
    "gf_omega_cyc",
    "is_enriched",
    "is_toric_poset",
    "is_toric_transitive",
    "k_peak",
    "kcyc",
    "linear_extensions",
    "monomial",
    "omega",
    "omega_cyc",
    "omega_dag",
    "omega_toric",
    "partition_to_marking",
    "peak_set",
    "rotations",
    "runs",
    "toric_class",
    "toric_extensions",
    "transitive_closure",
]

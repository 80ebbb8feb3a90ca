"""Primitive Pythagorean triples as a ternary tree, via the modular group."""

from .diffs import (
    DescentTrace,
    DiffForm,
    NotRepresentableError,
    QuadInt,
    difference_path,
    differences,
    invariant_child_kind,
    is_difference,
    is_representable_R,
    lagrange_descent,
    reconstruct,
    root_triple_for_difference,
    solve_norm,
)
from .arith import factorize
from .matrix import (
    IntMat2,
    NilpotentDecomposition,
    NilpotentMat,
    conjugate,
    decompose,
    is_nilpotent,
    mul,
    triple_extract,
)
from .tree import (
    ROOT,
    ChildKind,
    ParamPair,
    PrimTriple,
    child,
    children,
    level_iter,
    locate,
    node_at,
    params_from_triple,
    parent,
    triple_from_params,
    word_for,
)
from .words import (
    CosetLevel,
    Gamma2Word,
    Syllable,
    coset_level,
    delta,
    evaluate,
    normalize,
    word_to_triple,
)

__version__ = "0.1.0"

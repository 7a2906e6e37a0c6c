"""Maximal mod-n images with a prescribed fixed submodule shape.

For a torsion shape T and a supported modulus n, this finds the conjugacy
classes of subgroups G of GL_2(Z/nZ) that

  * contain -I,
  * have surjective determinant,
  * contain a complex-conjugation shaped element, and
  * whose S_3-residual fixes exactly a submodule of shape T,

and keeps only the ones maximal under containment up to conjugacy.  These
are the candidate images of Galois for curves whose torsion grows to T over
the compositum of all cubic fields.
"""

from __future__ import annotations

from dataclasses import dataclass

from cubictorsion.groups.enumerate import enumerate_subgroups
from cubictorsion.groups.group import MatrixGroup
from cubictorsion.groups.matrices import neg_identity
from cubictorsion.groups.s3 import s3_residual
from cubictorsion.groups.structure import (
    conjugate_into,
    det_surjective,
    fixed_submodule,
    has_cc_element,
    level_of,
)
from cubictorsion.shapes import TorsionShape

SUPPORTED_MODULI = (2, 3, 4, 6, 8, 9, 12)


@dataclass
class MaximalImage:
    group: MatrixGroup
    level: int


def maximal_images_for_T(n: int, T) -> list[MaximalImage]:
    """Maximal admissible image classes in GL_2(Z/nZ) for torsion shape T.

    Runs a full subgroup enumeration of GL_2(Z/nZ); n = 12 is supported but
    long-running.
    """
    if n not in SUPPORTED_MODULI:
        raise ValueError("unsupported n")
    T = TorsionShape(*T)
    full = MatrixGroup.full(n)
    classes = enumerate_subgroups(full, up_to_conjugacy=True,
                                  max_order=full.order)
    minus_one = neg_identity(n)
    candidates = []
    for G in classes:
        if minus_one not in G:
            continue
        if not det_surjective(G):
            continue
        if not has_cc_element(G):
            continue
        if fixed_submodule(s3_residual(G), n) != T:
            continue
        candidates.append(G)

    maximal = []
    for G in candidates:
        dominated = any(H.order > G.order and conjugate_into(G, H) is not None
                        for H in candidates)
        if not dominated:
            maximal.append(G)
    maximal.sort(key=lambda g: (level_of(g), g.order, g.elements))
    return [MaximalImage(G, level_of(G)) for G in maximal]

import logging
from typing import Optional, Union

from quiverhopf.core.algebras.base import GradedHopfAlgebra
from quiverhopf.core.algebras.copath import CopathAlgebra
from quiverhopf.core.algebras.semipath import SemipathAlgebra
from quiverhopf.core.algebras.taft import TaftAlgebra
from quiverhopf.core.braided import LINEAR, SYMMETRIC, TENSOR, Biproduct, BraidedAlgebra, YDModule
from quiverhopf.core.structure import esc_to_crsc
from quiverhopf.models.structure import ESC, RSC
from quiverhopf import config

# Configure logger
logger = logging.getLogger(__name__)

ALGEBRA_KINDS = ("copath", "semipath", "taft", "tensor", "symmetric", "linear", "biproduct")


def create_algebra(kind: str, structure: Union[RSC, ESC], cutoff: Optional[int] = None) -> GradedHopfAlgebra:
    """
    Creates the algebra of the given kind for an RSC or ESC.

    Args:
        kind (str): Type of algebra. Valid values: 'copath', 'semipath', 'taft', 'tensor',
                    'symmetric', 'linear', 'biproduct'.
        structure (Union[RSC, ESC]): The data; ESC-only kinds reject an RSC.
        cutoff (int, optional): Degree cutoff. If None, the value from config.DEGREE_CUTOFF is used.

    Returns:
        GradedHopfAlgebra: Initialized algebra.

    Raises:
        ValueError: If the kind is not recognized or needs an ESC.
    """
    cutoff = config.DEGREE_CUTOFF if cutoff is None else cutoff

    if kind == "copath":
        logger.info(f"Initializing co-path algebra of {structure.name}")
        rsc = esc_to_crsc(structure) if isinstance(structure, ESC) else structure
        return CopathAlgebra.from_rsc(rsc, cutoff=cutoff)

    elif kind == "semipath":
        logger.info(f"Initializing semi-path algebra of {structure.name}")
        if isinstance(structure, ESC):
            return SemipathAlgebra.from_esc(structure, cutoff=cutoff)
        return SemipathAlgebra.from_rsc(structure, cutoff=cutoff)

    if kind in ALGEBRA_KINDS[2:] and not isinstance(structure, ESC):
        logger.error(f"Algebra type {kind} needs an element system")
        raise ValueError(f"Algebra type {kind} needs an ESC, got an RSC")

    if kind == "taft":
        logger.info(f"Initializing multiple Taft algebra of {structure.name}")
        return TaftAlgebra(structure, cutoff=cutoff)

    elif kind in (TENSOR, SYMMETRIC, LINEAR):
        logger.info(f"Initializing braided {kind} algebra of {structure.name}")
        return BraidedAlgebra(YDModule(structure), kind, cutoff=cutoff)

    elif kind == "biproduct":
        logger.info(f"Initializing biproduct R(G, g_i, chi_i^-1) # kG of {structure.name}")
        return Biproduct(BraidedAlgebra(YDModule(structure).inverse(), LINEAR, cutoff=cutoff))

    else:
        logger.error(f"Unknown algebra type: {kind}")
        raise ValueError(f"Unknown algebra type: {kind}. "
                         f"Valid values: {', '.join(repr(k) for k in ALGEBRA_KINDS)}")

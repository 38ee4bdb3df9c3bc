# quiverhopf/utils/literals.py
import logging
import re
from typing import List, Sequence, Tuple

from quiverhopf.core.algebras.base import GradedHopfAlgebra
from quiverhopf.core.algebras.copath import CopathAlgebra
from quiverhopf.core.algebras.semipath import SemipathAlgebra
from quiverhopf.core.algebras.taft import TaftAlgebra
from quiverhopf.core.braided import BraidedAlgebra
from quiverhopf.core.group import Group
from quiverhopf.core.linear import LinearCombination
from quiverhopf.core.quiver import Path
from quiverhopf.exceptions import ConfigError

# Configure logger
logger = logging.getLogger(__name__)

Token = Tuple[str, object]

_LETTER = re.compile(r"^E(?P<label>[^\^]+)(?:\^(?P<power>\d+))?$")
_STEP = re.compile(r"\s*-a(\d+)->\s*")


def parse_word(text: str, group: Group, labels: Sequence[str]) -> List[Token]:
    """
    Parses a word such as "g^[1] * E1^2 * E2": factors separated by '*' or spaces,
    each a group element literal or a generator E<label> with an optional power.

    Returns:
        List[Token]: ("g", element) and ("E", index) tokens in factor order.
    """
    tokens: List[Token] = []
    for factor in re.split(r"[\s*]+", text.strip()):
        if not factor:
            continue
        match = _LETTER.match(factor)
        if match and match.group("label") in labels:
            index = list(labels).index(match.group("label"))
            tokens.extend([("E", index)] * int(match.group("power") or 1))
            continue
        try:
            tokens.append(("g", group.parse_element(factor)))
        except ValueError:
            logger.error(f"Unknown factor {factor!r} in {text!r}")
            raise ConfigError(f"unknown factor {factor!r}; generators are "
                              f"{', '.join('E' + label for label in labels)}")
    return tokens


def parse_path(text: str, algebra: CopathAlgebra) -> Path:
    """
    Parses "x0 -a1-> x1 -a2-> x2": vertices as group literals and arrow indices
    (1-based) between consecutive vertices.
    """
    group = algebra.group
    parts = _STEP.split(text.strip())
    try:
        vertices = [group.parse_element(v) for v in parts[0::2]]
        indices = [int(i) - 1 for i in parts[1::2]]
        if not indices:
            return Path.vertex(vertices[0])
        arrows = [algebra.quiver.arrow(x, y, k) for x, y, k in zip(vertices, vertices[1:], indices)]
    except (ValueError, IndexError, KeyError) as e:
        logger.error(f"Error parsing path {text!r}: {str(e)}")
        raise ConfigError(f"invalid path literal {text!r}: {e}") from e
    return Path.of(arrows)


def evaluate_literal(algebra: GradedHopfAlgebra, text: str) -> LinearCombination:
    """
    The element named by a literal: a path for co-path algebras, a word in group
    elements and generators for the semi-path, Taft and braided algebras.
    """
    if isinstance(algebra, CopathAlgebra):
        return algebra.element(parse_path(text, algebra))
    if isinstance(algebra, SemipathAlgebra):
        labels = [label[1:] if label.startswith("E") else label for label in algebra.labels]
        factors = [algebra.vertex(v) if kind == "g" else algebra.word(algebra.group.identity, v)
                   for kind, v in parse_word(text, algebra.group, labels)]
        return algebra.product(*factors)
    if isinstance(algebra, TaftAlgebra):
        factors = [algebra.group_element(v) if kind == "g" else algebra.generator(v)
                   for kind, v in parse_word(text, algebra.group, algebra.esc.labels)]
        return algebra.product(*factors)
    if isinstance(algebra, BraidedAlgebra):
        module = algebra.module
        tokens = parse_word(text, module.group, module.esc.labels)
        if any(kind == "g" for kind, _ in tokens):
            raise ConfigError("braided algebras have no group elements")
        return algebra.word(*(v for _, v in tokens))
    raise ConfigError(f"literals are not supported for {algebra.name} algebras")

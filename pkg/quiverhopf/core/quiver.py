# quiverhopf/core/quiver.py
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

from more_itertools import distinct_permutations

from quiverhopf import config
from quiverhopf.core.group import ConjClass, CosetSystem, Element, Group, class_of
from quiverhopf.exceptions import BoundExceededError, UnsupportedGroupError
from quiverhopf.models.structure import RSC

# Configure logger
logger = logging.getLogger(__name__)

ThinSplit = Tuple[int, ...]


@dataclass(frozen=True)
class Arrow:
    """
    The arrow a^(i)_{y,x} from x to y, where x^-1 y lies in the ramified class at
    position cls and i is the index inside I_C(r).

    theta is informative only: the bimodule recomputes it from its own coset system.
    """

    source: Element
    target: Element
    cls: int
    index: int
    theta: int = field(default=0, compare=False)

    def label(self, group: Group) -> str:
        return f"a{self.index + 1}[{group.format_element(self.target)}<-{group.format_element(self.source)}]"


@dataclass(frozen=True)
class Path:
    """
    A path a_n ... a_1 stored bottom-up (arrows[0] = a_1); a path of length 0 is
    the vertex start.
    """

    start: Element
    arrows: Tuple[Arrow, ...] = ()

    def __post_init__(self):
        current = self.start
        for arrow in self.arrows:
            if arrow.source != current:
                raise ValueError(f"arrows are not composable at {arrow}")
            current = arrow.target

    @classmethod
    def vertex(cls, x: Element) -> "Path":
        return cls(start=x)

    @classmethod
    def of(cls, arrows: Sequence[Arrow]) -> "Path":
        """The path a_n ... a_1 from arrows listed a_1 first."""
        if not arrows:
            raise ValueError("use Path.vertex for paths of length 0")
        return cls(start=arrows[0].source, arrows=tuple(arrows))

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def source(self) -> Element:
        return self.start

    @property
    def target(self) -> Element:
        return self.arrows[-1].target if self.arrows else self.start

    def is_vertex(self) -> bool:
        return not self.arrows

    def upper(self, k: int) -> "Path":
        """p_{>k} = a_n ... a_{k+1}; the vertex t(p) when k = n."""
        if k >= self.length:
            return Path.vertex(self.target)
        return Path(start=self.arrows[k].source, arrows=self.arrows[k:])

    def lower(self, k: int) -> "Path":
        """p_{<=k} = a_k ... a_1; the vertex s(p) when k = 0."""
        if k <= 0:
            return Path.vertex(self.start)
        return Path(start=self.start, arrows=self.arrows[:k])

    def to_string(self, group: Group) -> str:
        if not self.arrows:
            return group.format_element(self.start)
        return "·".join(arrow.label(group) for arrow in reversed(self.arrows))

    def sort_key(self) -> Tuple:
        return (self.length, repr(self.start), tuple((a.source, a.target, a.cls, a.index) for a in self.arrows))


class HopfQuiver:
    """
    The Hopf quiver Q(G, r): vertex set G and r_C arrows from x to y whenever
    x^-1 y lies in C. Each ramified class carries a coset system that fixes theta.
    """

    def __init__(self, group: Group, classes: Sequence[ConjClass], multiplicities: Sequence[int],
                 cosets: Optional[Sequence[CosetSystem]] = None):
        self.group = group
        self.classes = list(classes)
        self.multiplicities = [int(r) for r in multiplicities]
        if len(self.classes) != len(self.multiplicities):
            raise ValueError("one multiplicity per ramified class is required")
        if cosets is None:
            cosets = [CosetSystem.standard(group, c) for c in self.classes]
        self.cosets = list(cosets)
        self._class_of: Dict[Element, int] = {}
        for k, conj in enumerate(self.classes):
            for member in conj.members:
                self._class_of[member] = k

    @classmethod
    def from_rsc(cls, rsc: RSC, cosets: Optional[Sequence[CosetSystem]] = None) -> "HopfQuiver":
        return cls(rsc.group, [c.conj for c in rsc.classes], [c.r for c in rsc.classes], cosets)

    # ------------------------------------------------------------------ arrows

    def class_position(self, c: Element) -> Optional[int]:
        return self._class_of.get(c)

    def arrows_between(self, x: Element, y: Element) -> List[Arrow]:
        """The arrows of yQ_1x in index order."""
        c = self.group.multiply(self.group.inverse(x), y)
        k = self._class_of.get(c)
        if k is None:
            return []
        theta = self.cosets[k].theta_of(c)
        return [Arrow(x, y, k, i, theta) for i in range(self.multiplicities[k])]

    def arrows_from(self, x: Element) -> List[Arrow]:
        result = []
        for conj in self.classes:
            for c in conj.members:
                result.extend(self.arrows_between(x, self.group.multiply(x, c)))
        return result

    def arrow(self, x: Element, y: Element, index: int = 0) -> Arrow:
        """The arrow a^(index)_{y,x}; raises ValueError when it does not exist."""
        arrows = self.arrows_between(x, y)
        if not 0 <= index < len(arrows):
            raise ValueError(f"no arrow a{index + 1} from {self.group.format_element(x)} "
                             f"to {self.group.format_element(y)}")
        return arrows[index]

    def vertices(self) -> Tuple[Element, ...]:
        if not self.group.is_finite:
            raise UnsupportedGroupError("the quiver of a free abelian group has infinitely many vertices")
        return self.group.elements

    def arrows(self) -> List[Arrow]:
        return [a for x in self.vertices() for a in self.arrows_from(x)]

    def paths(self, length: int, starts: Optional[Sequence[Element]] = None) -> List[Path]:
        """All paths of the given length starting at the given vertices (all of G by default)."""
        starts = list(starts) if starts is not None else list(self.vertices())
        current = [Path.vertex(x) for x in starts]
        for _ in range(length):
            current = [Path(start=p.start, arrows=p.arrows + (a,))
                       for p in current for a in self.arrows_from(p.target)]
        return current

    def __repr__(self):
        ramification = ", ".join(f"{self.group.format_element(c.representative)}: {r}"
                                 for c, r in zip(self.classes, self.multiplicities))
        return f"HopfQuiver({self.group.name}; {ramification})"


def build_hopf_quiver(group: Group, ramification: Dict[Element, int]) -> HopfQuiver:
    """
    Builds the Hopf quiver of a ramification datum given as u(C) -> r_C.

    Classes with r_C = 0 are dropped, so r = 0 gives the arrowless quiver on G.
    """
    classes, multiplicities = [], []
    for rep, r in sorted(ramification.items()):
        if r < 0:
            raise ValueError(f"ramification must be nonnegative, got {r}")
        if r == 0:
            continue
        conj = class_of(group, rep)
        # the representative passed in is u(C)
        conj = ConjClass(representative=rep, members=conj.members,
                         centralizer=group.centralizer(rep) if group.is_finite else ())
        classes.append(conj)
        multiplicities.append(r)
    quiver = HopfQuiver(group, classes, multiplicities)
    logger.info(f"Built {quiver!r}")
    return quiver


# ---------------------------------------------------------------------- thin splits


def thin_splits(n: int, m: int, bound: Optional[int] = None) -> List[ThinSplit]:
    """
    All d in D_n^{n+m}, written (d_{n+m}, ..., d_1), in lexicographic order.

    Raises:
        BoundExceededError: If n + m exceeds the thin split bound.
    """
    bound = config.THIN_SPLIT_BOUND if bound is None else bound
    if n < 0 or m < 0:
        raise ValueError(f"thin splits need nonnegative sizes, got n = {n}, m = {m}")
    if n + m > bound:
        logger.error(f"Thin split enumeration refused for n + m = {n + m}")
        raise BoundExceededError("n + m", n + m, bound)
    splits = [tuple(d) for d in distinct_permutations([0] * m + [1] * n)]
    logger.debug(f"D_{n}^{n + m} has {len(splits)} members (expected {comb(n + m, n)})")
    return splits


def apply_thin_split(d: ThinSplit, path: Path) -> List[Union[Arrow, Element]]:
    """
    The sequence dA, listed top-down like d: position i carries a_{d(i)} when
    d_i = 1 and the vertex t(a_{d(i)}) otherwise, with t(a_0) = s(a_1).
    """
    if sum(d) != path.length or any(x not in (0, 1) for x in d):
        raise ValueError(f"{d} is not a thin split for a path of length {path.length}")
    bottom_up: List[Union[Arrow, Element]] = []
    taken = 0
    for di in reversed(d):
        if di:
            bottom_up.append(path.arrows[taken])
            taken += 1
        else:
            bottom_up.append(path.arrows[taken - 1].target if taken else path.start)
    return list(reversed(bottom_up))

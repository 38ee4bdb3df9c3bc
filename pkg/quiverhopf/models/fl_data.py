# quiverhopf/models/fl_data.py
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from quiverhopf.core.group import Element, Group
from quiverhopf.core.scalar import Scalar
from quiverhopf.models.structure import ESC


@dataclass
class FLBlock:
    """
    One block u of FL data: J_u, its mirror J_u' (sigma(j1[k]) = j2[k]), the Cartan
    block A, symmetrizers d and the parameter q_u. Indices point into the ESC.
    """

    j1: List[int]
    j2: List[int]
    cartan: List[List[int]]
    d: List[int]
    q: Scalar

    def local(self, i: int) -> int:
        """Position of a J_u index inside the block."""
        return self.j1.index(i)

    def a(self, i: int, j: int) -> int:
        return self.cartan[self.local(i)][self.local(j)]

    def d_of(self, i: int) -> int:
        return self.d[self.local(i)]

    def to_dict(self) -> Dict[str, Any]:
        return {"j1": list(self.j1), "j2": list(self.j2), "cartan": [list(row) for row in self.cartan],
                "d": list(self.d), "q": self.q.to_string()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FLBlock":
        return cls(j1=[int(i) for i in data["j1"]], j2=[int(i) for i in data["j2"]],
                   cartan=[[int(a) for a in row] for row in data["cartan"]],
                   d=[int(x) for x in data["d"]], q=Scalar.coerce(str(data["q"])))


@dataclass
class FLData:
    """ESC enriched with the partition, sigma, Cartan data, xi elements and r_ij."""

    esc: ESC
    blocks: List[FLBlock] = field(default_factory=list)
    xi: List[Element] = field(default_factory=list)
    r: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def group(self) -> Group:
        return self.esc.group

    @property
    def j1(self) -> List[int]:
        return [i for block in self.blocks for i in block.j1]

    @property
    def j2(self) -> List[int]:
        return [i for block in self.blocks for i in block.j2]

    def is_j1(self, i: int) -> bool:
        return any(i in block.j1 for block in self.blocks)

    def block_of(self, i: int) -> FLBlock:
        for block in self.blocks:
            if i in block.j1 or i in block.j2:
                return block
        raise ValueError(f"index {i} belongs to no block")

    def sigma(self, i: int) -> int:
        block = self.block_of(i)
        return block.j2[block.j1.index(i)]

    def sigma_inverse(self, j: int) -> int:
        block = self.block_of(j)
        return block.j1[block.j2.index(j)]

    def partner(self, i: int) -> int:
        """The J^(1) index attached to i (i itself, or sigma^-1(i))."""
        return i if self.is_j1(i) else self.sigma_inverse(i)

    def r_value(self, i: int, j: int) -> Optional[int]:
        """r_ij for i != j in the same J_u, or in the same J_u' through r_sigma(i)sigma(j) = r_ij."""
        if not self.is_j1(i) and not self.is_j1(j):
            i, j = self.sigma_inverse(i), self.sigma_inverse(j)
        return self.r.get((i, j))

    def chi_xi(self, i: int, j: int) -> Scalar:
        """chi_i(xi_j)."""
        return self.esc.chi[i](self.xi[j])

    def to_dict(self) -> Dict[str, Any]:
        group = self.esc.group
        return {
            "esc": self.esc.to_dict(),
            "blocks": [block.to_dict() for block in self.blocks],
            "xi": [group.format_element(x) for x in self.xi],
            "r": [[i, j, v] for (i, j), v in sorted(self.r.items())],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], group: Group) -> "FLData":
        return cls(
            esc=ESC.from_dict(data["esc"], group),
            blocks=[FLBlock.from_dict(b) for b in data.get("blocks", [])],
            xi=[group.parse_element(x) for x in data.get("xi", [])],
            r={(int(i), int(j)): int(v) for i, j, v in data.get("r", [])},
        )

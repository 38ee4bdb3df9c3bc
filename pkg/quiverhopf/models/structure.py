# quiverhopf/models/structure.py
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from quiverhopf.core.group import (
    ABELIAN,
    CAYLEY,
    Character,
    ConjClass,
    Element,
    Group,
    class_of,
)
from quiverhopf.core.scalar import Scalar


def character_to_data(character: Character) -> Any:
    """Serializes a character: exponent list, generator-value strings or an element table."""
    group = character.group
    if character.table is not None:
        return {group.format_element(x): character.table[x].to_string() for x in sorted(character.table)}
    if group.kind == ABELIAN:
        return list(character.exponents())
    return [v.to_string() for v in character.generator_values]


def character_from_data(group: Group, data: Any) -> Character:
    if isinstance(data, dict):
        table = {group.parse_element(k): Scalar.coerce(str(v)) for k, v in data.items()}
        return Character.from_table(group, table)
    values = list(data)
    if group.kind == ABELIAN and all(isinstance(v, int) for v in values):
        return Character.from_exponents(group, values)
    return Character.from_values(group, [Scalar.coerce(v) for v in values])


@dataclass
class RamifiedClass:
    """A conjugacy class C with r_C > 0 and one centralizer character per arrow index."""

    conj: ConjClass
    characters: List[Character] = field(default_factory=list)

    @property
    def r(self) -> int:
        return len(self.characters)

    @property
    def representative(self) -> Element:
        return self.conj.representative


@dataclass
class RSC:
    """Ramification system with characters: (G, r, u, chi)."""

    group: Group
    classes: List[RamifiedClass] = field(default_factory=list)
    name: str = "RSC"

    def __post_init__(self):
        self.classes = [c for c in self.classes if c.r > 0]
        seen = set()
        for ramified in self.classes:
            members = ramified.conj.members
            if seen.intersection(members):
                raise ValueError(f"class of {self.group.format_element(ramified.representative)} appears twice")
            seen.update(members)
            for character in ramified.characters:
                self._check_character(ramified.conj, character)

    def _check_character(self, conj: ConjClass, character: Character) -> None:
        if self.group.kind != CAYLEY:
            return
        if character.table is None or set(character.table) != set(conj.centralizer):
            raise ValueError(f"characters of the class of {self.group.format_element(conj.representative)} "
                             f"must be defined exactly on its centralizer")

    # ------------------------------------------------------------------ queries

    def ramification(self) -> Dict[Element, int]:
        """r as a map u(C) -> r_C (classes with r_C = 0 omitted)."""
        return {c.representative: c.r for c in self.classes}

    def ramified_class(self, x: Element) -> Optional[RamifiedClass]:
        """The ramified class containing x, if any."""
        return next((c for c in self.classes if x in c.conj.members), None)

    def arrow_labels(self) -> List[Tuple[int, int]]:
        """Global arrow index set: (class position, index inside I_C(r))."""
        return [(k, i) for k, c in enumerate(self.classes) for i in range(c.r)]

    @property
    def total_rank(self) -> int:
        return sum(c.r for c in self.classes)

    def is_central(self) -> bool:
        return all(c.conj.is_singleton and self.group.is_central(c.representative) for c in self.classes)

    def to_dict(self) -> Dict[str, Any]:
        """Converts the RSC to its config dictionary."""
        return {
            "name": self.name,
            "classes": [
                {
                    "rep": self.group.format_element(c.representative),
                    "r": c.r,
                    "chars": [character_to_data(ch) for ch in c.characters],
                }
                for c in self.classes
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], group: Group) -> "RSC":
        """Creates an RSC from its config dictionary; "rep" also fixes u(C)."""
        classes = []
        for item in data.get("classes", []):
            rep = group.parse_element(item["rep"])
            members = class_of(group, rep).members
            conj = ConjClass(representative=rep, members=members,
                             centralizer=group.centralizer(rep) if group.is_finite else ())
            chars = [character_from_data(group, ch) for ch in item.get("chars", [])]
            if "r" in item and int(item["r"]) != len(chars):
                raise ValueError(f"class {item['rep']}: r = {item['r']} but {len(chars)} characters given")
            classes.append(RamifiedClass(conj=conj, characters=chars))
        return cls(group=group, classes=classes, name=data.get("name", "RSC"))


@dataclass
class ESC:
    """Element system with characters: (G, g_i, chi_i; i in J), g_i central."""

    group: Group
    g: List[Element] = field(default_factory=list)
    chi: List[Character] = field(default_factory=list)
    labels: List[str] = field(default_factory=list)
    name: str = "ESC"

    def __post_init__(self):
        if len(self.g) != len(self.chi):
            raise ValueError(f"ESC needs one character per element, got {len(self.g)} and {len(self.chi)}")
        if not self.labels:
            self.labels = [str(i + 1) for i in range(len(self.g))]
        if len(self.labels) != len(self.g) or len(set(self.labels)) != len(self.labels):
            raise ValueError("ESC labels must be distinct, one per index")
        for gi in self.g:
            if not self.group.is_central(gi):
                raise ValueError(f"{self.group.format_element(gi)} is not central")
        if self.group.kind == CAYLEY:
            for ch in self.chi:
                if ch.table is None or set(ch.table) != set(self.group.elements):
                    raise ValueError("ESC characters must be characters of the whole group")

    @property
    def size(self) -> int:
        return len(self.g)

    def q(self, i: int, j: int) -> Scalar:
        """chi_j(g_i), the braiding scalar between indices i and j."""
        return self.chi[j](self.g[i])

    def index(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise ValueError(f"unknown ESC index {label!r}; valid: {self.labels}")

    def to_dict(self) -> Dict[str, Any]:
        """Converts the ESC to its config dictionary."""
        return {
            "name": self.name,
            "items": [
                {"label": label, "g": self.group.format_element(gi), "chi": character_to_data(ch)}
                for label, gi, ch in zip(self.labels, self.g, self.chi)
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], group: Group) -> "ESC":
        """Creates an ESC from its config dictionary."""
        items = data.get("items", [])
        return cls(
            group=group,
            g=[group.parse_element(item["g"]) for item in items],
            chi=[character_from_data(group, item["chi"]) for item in items],
            labels=[str(item.get("label", k + 1)) for k, item in enumerate(items)],
            name=data.get("name", "ESC"),
        )

    @classmethod
    def from_items(cls, group: Group, items: Sequence[Tuple[Element, Character]],
                   labels: Optional[Sequence[str]] = None) -> "ESC":
        return cls(group=group, g=[x for x, _ in items], chi=[ch for _, ch in items],
                   labels=list(labels or []))

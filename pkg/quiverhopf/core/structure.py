# quiverhopf/core/structure.py
import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb, prod
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix

from quiverhopf import config
from quiverhopf.core.group import (
    ABELIAN,
    Character,
    ConjClass,
    Element,
    Group,
    GroupMap,
    dual_group,
    isomorphisms,
    singleton_class,
)
from quiverhopf.exceptions import BoundExceededError, ConfigError, PreconditionError, UnsupportedGroupError
from quiverhopf.models.fl_data import FLData
from quiverhopf.models.report import Report
from quiverhopf.models.structure import ESC, RSC, RamifiedClass

# Configure logger
logger = logging.getLogger(__name__)

COMMUTATIVE = "commutative"
WEAKLY_COMMUTATIVE = "weakly_commutative"
NEITHER = "neither"


@dataclass
class RSCWitness:
    """Isomorphism data: phi, the conjugating elements h_C and the index bijections phi_C."""

    phi: GroupMap
    conjugators: Dict[Element, Element]
    matchings: Dict[Element, List[int]]

    def __str__(self):
        group = self.phi.source
        parts = [f"phi: {self.phi.to_string()}"]
        for rep, h in sorted(self.conjugators.items()):
            parts.append(f"h[{group.format_element(rep)}] = {group.format_element(h)}, "
                         f"phi_C = {self.matchings[rep]}")
        return "; ".join(parts)


@dataclass
class ESCWitness:
    """Isomorphism data: phi and the index permutation sigma."""

    phi: GroupMap
    sigma: List[int]

    def __str__(self):
        return f"phi: {self.phi.to_string()}; sigma: {self.sigma}"


# ---------------------------------------------------------------------- conversions


def esc_to_crsc(e: ESC) -> RSC:
    """
    The central RSC of an ESC: i ~ j iff g_i = g_j, r_{g} = |[i]| and the class
    {g} carries the characters of its equivalence class.
    """
    buckets: Dict[Element, List[Character]] = {}
    for gi, ch in zip(e.g, e.chi):
        buckets.setdefault(gi, []).append(ch)
    classes = [RamifiedClass(conj=singleton_class(e.group, x), characters=chars)
               for x, chars in sorted(buckets.items())]
    return RSC(group=e.group, classes=classes, name=f"crsc({e.name})")


def crsc_to_esc(r: RSC) -> ESC:
    """
    The ESC of a central RSC; J is the disjoint union of the index sets I_{g}(r).

    Raises:
        PreconditionError: If the ramification is not central.
    """
    if not r.is_central():
        logger.error(f"{r.name} is not central")
        raise PreconditionError(f"{r.name} has a ramified class that is not a central singleton")
    g, chi, labels = [], [], []
    for k, ramified in enumerate(r.classes):
        for i, ch in enumerate(ramified.characters):
            g.append(ramified.representative)
            chi.append(ch)
            labels.append(f"{k + 1}.{i + 1}")
    return ESC(group=r.group, g=g, chi=chi, labels=labels, name=f"esc({r.name})")


def esc_arrow_positions(e: ESC) -> List[Tuple[int, int]]:
    """For each ESC index j, the (class position, arrow index) of E_j in esc_to_crsc(e)."""
    order = sorted(set(e.g))
    seen: Dict[Element, int] = {}
    positions = []
    for gi in e.g:
        positions.append((order.index(gi), seen.get(gi, 0)))
        seen[gi] = seen.get(gi, 0) + 1
    return positions


# ---------------------------------------------------------------------- isomorphisms


def _match(source: Sequence[Character], target: Sequence[Character]) -> Optional[List[int]]:
    """Bijection k -> m with source[k] == target[m], or None."""
    free = list(range(len(target)))
    matching = []
    for ch in source:
        m = next((m for m in free if target[m] == ch), None)
        if m is None:
            return None
        free.remove(m)
        matching.append(m)
    return matching


def _transport(ch: Character, phi: GroupMap, h: Element, target_conj: ConjClass) -> Character:
    """The character x' -> ch(h phi^-1(x') h^-1) on the centralizer of u'(phi(C))."""
    source = phi.source
    back = phi.inverse()
    if ch.table is None:
        return ch.compose(back)
    table = {}
    for x in target_conj.centralizer:
        y = source.multiply(h, source.multiply(back(x), source.inverse(h)))
        table[x] = ch(y)
    return Character(phi.target, table=table)


def rsc_isomorphic(a: RSC, b: RSC, bound: Optional[int] = None) -> Optional[RSCWitness]:
    """
    Decides whether two RSCs are isomorphic by exhaustive search over group
    isomorphisms, conjugating elements h_C and character matchings.

    Returns:
        Optional[RSCWitness]: A witness, or None when the structures are not isomorphic.

    Raises:
        BoundExceededError: If the groups exceed the automorphism bound.
    """
    if len(a.classes) != len(b.classes) or a.total_rank != b.total_rank:
        return None
    for phi in isomorphisms(a.group, b.group, bound):
        conjugators, matchings = {}, {}
        for ramified in a.classes:
            target = b.ramified_class(phi(ramified.representative))
            if target is None or target.r != ramified.r:
                break
            found = False
            u_prime = target.representative
            for h in a.group.elements:
                # phi(h^-1 u(C) h) = u'(phi(C))
                if phi(a.group.conjugate(ramified.representative, h)) != u_prime:
                    continue
                moved = [_transport(ch, phi, h, target.conj) for ch in ramified.characters]
                matching = _match(moved, target.characters)
                if matching is not None:
                    conjugators[ramified.representative] = h
                    matchings[ramified.representative] = matching
                    found = True
                    break
            if not found:
                break
        else:
            return RSCWitness(phi=phi, conjugators=conjugators, matchings=matchings)
    return None


def esc_isomorphic(a: ESC, b: ESC, bound: Optional[int] = None) -> Optional[ESCWitness]:
    """
    Decides ESC isomorphism: a group isomorphism phi and a bijection sigma with
    phi(g_i) = g'_sigma(i) and chi'_sigma(i) o phi = chi_i.
    """
    if a.size != b.size:
        return None
    for phi in isomorphisms(a.group, b.group, bound):
        free = list(range(b.size))
        sigma = []
        for gi, ch in zip(a.g, a.chi):
            image = phi(gi)
            m = next((m for m in free if b.g[m] == image and b.chi[m].compose(phi) == ch), None)
            if m is None:
                break
            free.remove(m)
            sigma.append(m)
        else:
            return ESCWitness(phi=phi, sigma=sigma)
    return None


# ---------------------------------------------------------------------- classification


def _abelian_only(group: Group) -> None:
    if group.kind != ABELIAN:
        raise UnsupportedGroupError("classification needs a finite abelian group in invariant-factor form")


def _transform_encoding(encoding: Tuple, phi: GroupMap, group: Group) -> Tuple:
    """Applies phi to an encoded central RSC/ESC: (element, exponents) -> (phi(x), exps of chi o phi^-1)."""
    back = phi.inverse()
    moved = []
    for x, exps in encoding:
        ch = Character.from_exponents(group, exps).compose(back)
        moved.append((phi(x), ch.exponents()))
    return tuple(sorted(moved))


def classify_rsc(group: Group, ramification: Dict[Element, int], bound: Optional[int] = None) -> List[RSC]:
    """
    Pairwise non-isomorphic RSCs with the given (G, r), one canonical (lexicographically
    minimal) representative per isomorphism class.

    Args:
        group (Group): A finite abelian group in invariant-factor form.
        ramification (Dict[Element, int]): r_C per element (classes are singletons).
        bound (int, optional): Maximum number of candidate structures.

    Returns:
        List[RSC]: Representatives sorted by their encoding.

    Raises:
        BoundExceededError: If the candidate count exceeds the bound.
    """
    _abelian_only(group)
    bound = config.CLASSIFY_BOUND if bound is None else bound
    ramification = {group.normalize(x): int(r) for x, r in ramification.items() if int(r) > 0}
    characters = dual_group(group)
    exps = [ch.exponents() for ch in characters]
    count = prod(comb(len(exps) + r - 1, r) for r in ramification.values())
    if count > bound:
        logger.error(f"Classification refused: {count} candidate structures")
        raise BoundExceededError("candidate structures", count, bound)
    autos = [phi for phi in isomorphisms(group, group)
             if all(ramification.get(phi(x), 0) == r for x, r in ramification.items())]
    slots = sorted(ramification.items())
    choices = [list(combinations_with_replacement(exps, r)) for _, r in slots]
    canonical = set()
    for pick in product(*choices):
        encoding = tuple(sorted((x, e) for (x, _), chosen in zip(slots, pick) for e in chosen))
        canonical.add(min(_transform_encoding(encoding, phi, group) for phi in autos))
    representatives = []
    for encoding in sorted(canonical):
        buckets: Dict[Element, List[Character]] = {}
        for x, e in encoding:
            buckets.setdefault(x, []).append(Character.from_exponents(group, e))
        classes = [RamifiedClass(conj=singleton_class(group, x), characters=chars)
                   for x, chars in sorted(buckets.items())]
        representatives.append(RSC(group=group, classes=classes, name=f"RSC#{len(representatives) + 1}"))
    logger.info(f"Classified {count} candidate RSCs over {group.name} into {len(representatives)} classes")
    return representatives


def classify_esc(group: Group, size: int, bound: Optional[int] = None) -> List[ESC]:
    """Pairwise non-isomorphic ESCs with |J| = size over a finite abelian group."""
    _abelian_only(group)
    bound = config.CLASSIFY_BOUND if bound is None else bound
    items = [(x, ch.exponents()) for x in group.elements for ch in dual_group(group)]
    count = comb(len(items) + size - 1, size)
    if count > bound:
        logger.error(f"Classification refused: {count} candidate structures")
        raise BoundExceededError("candidate structures", count, bound)
    autos = isomorphisms(group, group)
    canonical = {min(_transform_encoding(pick, phi, group) for phi in autos)
                 for pick in combinations_with_replacement(items, size)}
    result = []
    for encoding in sorted(canonical):
        result.append(ESC.from_items(group, [(x, Character.from_exponents(group, e)) for x, e in encoding]))
        result[-1].name = f"ESC#{len(result)}"
    logger.info(f"Classified {count} candidate ESCs over {group.name} into {len(result)} classes")
    return result


def example_rsc_z2(m: int, n: int) -> RSC:
    """Z2 with m loops at the identity class; chi_i = chi_+ for i <= n and chi_- otherwise."""
    if not 0 <= n <= m:
        raise ValueError(f"need 0 <= n <= m, got n = {n}, m = {m}")
    group = Group.cyclic(2)
    chars = [Character.from_exponents(group, [0 if i < n else 1]) for i in range(m)]
    return RSC(group=group, classes=[RamifiedClass(conj=singleton_class(group, group.identity),
                                                   characters=chars)],
               name=f"RSC(Z2, r1={m}, n={n})")


# ---------------------------------------------------------------------- commutativity


def commutativity_witness(e: ESC, strict: bool = False) -> Optional[Tuple[int, int]]:
    """First pair (i, j) with chi_i(g_j) chi_j(g_i) != 1 (i != j unless strict)."""
    for i in range(e.size):
        for j in range(i if strict else i + 1, e.size):
            if not (e.chi[i](e.g[j]) * e.chi[j](e.g[i])).is_one():
                return i, j
    return None


def quantum_commutativity(e: ESC) -> str:
    """'commutative', 'weakly_commutative' or 'neither'."""
    if commutativity_witness(e, strict=False) is not None:
        return NEITHER
    if commutativity_witness(e, strict=True) is not None:
        return WEAKLY_COMMUTATIVE
    return COMMUTATIVE


def is_weakly_commutative(e: ESC) -> bool:
    return commutativity_witness(e) is None


# ---------------------------------------------------------------------- FL data


def _first_failure(pairs, predicate):
    return next((p for p in pairs if not predicate(*p)), None)


def _check_metadata(fl: FLData) -> None:
    size = fl.esc.size
    for k, block in enumerate(fl.blocks):
        bad = [i for i in block.j1 + block.j2 if not 0 <= i < size]
        if bad:
            logger.error(f"FL block {k} refers to missing indices {bad}")
            raise ConfigError(f"FL block {k}: indices {bad} outside 0..{size - 1}")
    if fl.xi and len(fl.xi) != size:
        raise ConfigError(f"FL data needs one xi per index, got {len(fl.xi)} for {size}")


def validate_fl(fl: FLData) -> Report:
    """
    Checks the FL conditions one by one and names the resulting type
    (FL-matrix, FL, FL-free, FL-quantum-group; prefixed 'local' when there are
    several blocks). Conditions that depend on a failed one report it as their witness.

    Raises:
        ConfigError: If the metadata refers to indices the ESC does not have.
    """
    _check_metadata(fl)
    report = Report(command="validate_fl")
    e = fl.esc
    group = e.group
    chi, g = e.chi, e.g

    indices = [i for block in fl.blocks for i in block.j1 + block.j2]
    fl1 = None if sorted(indices) == list(range(e.size)) else sorted(indices)
    report.add("FL1", fl1 is None, "J is the disjoint union of the J_u and J_u'", fl1)

    fl2 = next((k for k, b in enumerate(fl.blocks)
                if len(b.j1) != len(b.j2) or len(set(b.j1)) != len(b.j1) or set(b.j1) & set(b.j2)), None)
    report.add("FL2", fl2 is None, "sigma: J_u -> J_u' is a bijection", fl2)
    sigma_ok = fl2 is None

    fl3 = None
    for block in fl.blocks:
        n, a = len(block.j1), block.cartan
        if len(a) != n or any(len(row) != n for row in a) or len(block.d) != n:
            fl3 = "Cartan block shape"
        else:
            fl3 = _first_failure([(i, j) for i in range(n) for j in range(n)],
                                 lambda i, j: a[i][j] == 2 if i == j else
                                 a[i][j] <= 0 and block.d[i] * a[i][j] == block.d[j] * a[j][i])
        if fl3 is not None:
            break
    report.add("FL3", fl3 is None, "a_ii = 2, a_ij <= 0, d_i a_ij = d_j a_ji", fl3)

    fl4 = None if fl3 is None and sigma_ok else "FL2/FL3 fail"
    for block in fl.blocks if fl4 is None else []:
        if not block.q:
            fl4 = "q_u = 0"
            break
        fl4 = _first_failure([(i, j) for i in block.j1 for j in block.j1],
                             lambda i, j: chi[i](g[j]) == block.q ** (-2 * block.d_of(i) * block.a(i, j))
                             and chi[fl.sigma(i)](g[j]) == chi[i](g[j]).inverse()
                             and g[fl.sigma(j)] == g[j])
        if fl4 is not None:
            break
    report.add("FL4", fl4 is None, "chi_i(g_j) = q_u^(-2 d_i a_ij), chi_sigma(i) = chi_i^-1 on g_j", fl4)

    xi = fl.xi
    fl5 = None if sigma_ok and xi else ("FL2 fails" if xi else "no xi elements")
    for block in fl.blocks if fl5 is None else []:
        fl5 = _first_failure([(i, j) for i in block.j1 for j in block.j1],
                             lambda i, j: chi[fl.sigma(i)](xi[j]) == chi[i](xi[j]).inverse())
        if fl5 is None:
            fl5 = _first_failure([(i, i) for i in block.j1],
                                 lambda i, _: xi[fl.sigma(i)] == group.inverse(xi[i])
                                 and g[i] == g[fl.sigma(i)] == group.power(xi[i], 2))
        if fl5 is None:
            fl5 = _first_failure([(i, j) for i in block.j1 for j in block.j1 if i != j],
                                 lambda i, j: (fl.r_value(i, j) or 0) > 0)
        if fl5 is not None:
            break
    report.add("FL5", fl5 is None, "xi_sigma(i) = xi_i^-1, g_i = g_sigma(i) = xi_i^2, r_ij > 0", fl5)

    # chi_i(xi_i) plays the role of the square root of chi_i(g_i)
    fl6 = None if fl5 is None else "FL5 fails"
    for block in fl.blocks if fl6 is None else []:
        fl6 = _first_failure(
            [(i, j) for i in block.j1 for j in block.j1 if i != j],
            lambda i, j: (chi[j](g[i]) * chi[i](g[j]) * chi[i](g[i]) ** (fl.r_value(i, j) - 1)).is_one()
            and fl.chi_xi(i, j) == fl.chi_xi(j, i)
            and (fl.chi_xi(i, i) ** (fl.r_value(i, j) - 1) * chi[j](g[i])).is_one())
        if fl6 is not None:
            break
    report.add("FL6", fl6 is None, "chi_j(g_i) chi_i(g_j) chi_i(g_i)^(r_ij - 1) = 1", fl6)

    fl7 = None
    j1 = fl.j1
    if group.is_finite or group.rank != len(j1) or not xi:
        fl7 = "G is not free abelian of rank |J^(1)|"
    else:
        det = Matrix([list(xi[i]) for i in j1]).det()
        if abs(int(det)) != 1:
            fl7 = f"det = {det}"
    report.add("FL7", fl7 is None, "G is free abelian on the xi_i, i in J^(1)", fl7)

    if fl3 is None and fl4 is None and fl5 is None:
        cartan_r = None
        for block in fl.blocks:
            cartan_r = _first_failure([(i, j) for i in block.j1 for j in block.j1 if i != j],
                                      lambda i, j: fl.r_value(i, j) == 1 - block.a(i, j))
            if cartan_r is not None:
                break
        report.add("cartan_r", cartan_r is None, "r_ij = 1 - a_ij", cartan_r)

    if fl5 is None and fl6 is None:
        xi_sym = None
        for block in fl.blocks:
            members = block.j1 + block.j2
            xi_sym = _first_failure([(i, j) for i in members for j in members],
                                    lambda i, j: fl.chi_xi(i, j) == fl.chi_xi(j, i))
            if xi_sym is not None:
                break
        report.add("xi_symmetry", xi_sym is None, "chi_i(xi_j) = chi_j(xi_i) inside each block", xi_sym)

    report.results["types"] = fl_types(report, len(fl.blocks))
    logger.info(f"FL validation: {', '.join(report.results['types']) or 'no FL type'}")
    return report


def fl_types(report: Report, blocks: int) -> List[str]:
    """Type names whose defining conditions all passed."""
    ok = {c.name: c.passed for c in report.checks}
    prefix = "" if blocks == 1 else "local "
    definitions = [
        ("FL-matrix", ["FL1", "FL2", "FL3", "FL4"]),
        ("FL", ["FL1", "FL2", "FL5", "FL6"]),
        ("FL-free", ["FL1", "FL2", "FL5", "FL6", "FL7"]),
        ("FL-quantum-group", ["FL1", "FL2", "FL3", "FL4", "FL7"]),
    ]
    return [prefix + name for name, needed in definitions if all(ok.get(n, False) for n in needed)]


def require_fl_free(fl: FLData) -> Report:
    """Validates and raises unless the data is of (local) FL-free type."""
    report = validate_fl(fl)
    if not any(t.endswith("FL-free") for t in report.results["types"]):
        failed = ", ".join(c.name for c in report.failures())
        logger.error(f"FL data is not of FL-free type: {failed}")
        raise PreconditionError(f"FL data is not of FL-free type (failed: {failed})")
    return report

# quiverhopf/core/bimodule.py
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from quiverhopf.core.group import Character, CosetSystem, Element
from quiverhopf.core.linear import LinearCombination
from quiverhopf.core.quiver import Arrow, HopfQuiver
from quiverhopf.core.scalar import Scalar
from quiverhopf.exceptions import UnsupportedGroupError
from quiverhopf.models.report import Report
from quiverhopf.models.structure import RSC

# Configure logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualBasisFunctional:
    """p_h, with p_h(g) = 1 if g = h and 0 otherwise."""

    h: Element

    def __call__(self, g: Element) -> Scalar:
        return Scalar.one() if g == self.h else Scalar.zero()


class ArrowBimodule:
    """
    The kG-Hopf bimodule kQ_1^c of an RSC: left action by translation, right
    action twisted by the centralizer characters through zeta_theta, and the
    coactions t(a) (x) a and a (x) s(a).
    """

    def __init__(self, rsc: RSC, cosets: Optional[Sequence[CosetSystem]] = None):
        self.rsc = rsc
        self.group = rsc.group
        self.quiver = HopfQuiver.from_rsc(rsc, cosets)
        self.cosets = self.quiver.cosets

    # ------------------------------------------------------------------ structure maps

    def character(self, a: Arrow) -> Character:
        return self.rsc.classes[a.cls].characters[a.index]

    def theta(self, a: Arrow) -> int:
        c = self.group.multiply(self.group.inverse(a.source), a.target)
        return self.cosets[a.cls].theta_of(c)

    def left_action(self, h: Element, a: Arrow) -> Arrow:
        """h . a_{y,x} = a_{hy,hx}."""
        group = self.group
        return Arrow(group.multiply(h, a.source), group.multiply(h, a.target), a.cls, a.index, a.theta)

    def right_action(self, a: Arrow, h: Element) -> Tuple[Scalar, Arrow]:
        """a_{y,x} . h = chi(zeta_theta(h)) a_{yh,xh}."""
        group = self.group
        z, theta = self.cosets[a.cls].zeta_theta(self.theta(a), h)
        moved = Arrow(group.multiply(a.source, h), group.multiply(a.target, h), a.cls, a.index, theta)
        return self.character(a)(z), moved

    def coactions(self, a: Arrow) -> Tuple[Tuple[Element, Arrow], Tuple[Arrow, Element]]:
        """(delta^-(a), delta^+(a)) = (t(a) (x) a, a (x) s(a))."""
        return (a.target, a), (a, a.source)

    def elements(self) -> Tuple[Element, ...]:
        return self.group.sample()

    def arrows(self) -> List[Arrow]:
        if self.group.is_finite:
            return self.quiver.arrows()
        return [a for x in self.group.sample() for a in self.quiver.arrows_from(x)]

    def base_arrows(self, k: int) -> List[Arrow]:
        """The arrows a^(i)_{u(C),1} of the class at position k."""
        group = self.group
        return self.quiver.arrows_between(group.identity, self.rsc.classes[k].representative)

    # ------------------------------------------------------------------ W o V

    def w_functor(self, k: int) -> Dict[int, Dict[Element, Scalar]]:
        """
        The right Z_u(C)-action b <| h = h^-1 . b . h on the arrows a^(i)_{u(C),1}.

        Returns:
            Dict[int, Dict[Element, Scalar]]: For each index i, the diagonal scalar of a^(i) <| h.
        """
        group = self.group
        ramified = self.rsc.classes[k]
        centralizer = ramified.conj.centralizer if group.is_finite else group.sample()
        table: Dict[int, Dict[Element, Scalar]] = {}
        for a in self.base_arrows(k):
            values = {}
            for h in centralizer:
                scalar, moved = self.right_action(a, h)
                back = self.left_action(group.inverse(h), moved)
                if back != a:
                    raise ValueError(f"{a.label(group)} <| {group.format_element(h)} left the arrow space")
                values[h] = scalar
            table[a.index] = values
        return table

    def recovered_characters(self) -> List[List[Character]]:
        """Characters read off the W functor, one list per ramified class."""
        return [
            [Character(self.group, table=values) for _, values in sorted(self.w_functor(k).items())]
            for k in range(len(self.rsc.classes))
        ]

    def round_trip_check(self) -> Report:
        report = Report(command="w-v-round-trip")
        for k, (ramified, recovered) in enumerate(zip(self.rsc.classes, self.recovered_characters())):
            for i, (expected, found) in enumerate(zip(ramified.characters, recovered)):
                mismatch = next((h for h in found.domain if found(h) != expected(h)), None)
                report.add(f"class{k + 1}.chi{i + 1}", mismatch is None,
                           witness=None if mismatch is None else self.group.format_element(mismatch))
        return report

    # ------------------------------------------------------------------ duality

    def dual_coactions(self, a: Arrow) -> Tuple[LinearCombination, LinearCombination]:
        """
        The (kG)*-coactions: sum_h p_h (x) a_{h^-1 y, h^-1 x} and
        sum_h chi(zeta_theta(h^-1)^-1) a_{y h^-1, x h^-1} (x) p_h.
        """
        group = self.group
        left, right = [], []
        for h in self.elements():
            inverse = group.inverse(h)
            left.append((1, (DualBasisFunctional(h), self.left_action(inverse, a))))
            z, theta = self.cosets[a.cls].zeta_theta(self.theta(a), inverse)
            moved = Arrow(group.multiply(a.source, inverse), group.multiply(a.target, inverse),
                          a.cls, a.index, theta)
            right.append((self.character(a)(group.inverse(z)), (moved, DualBasisFunctional(h))))
        return LinearCombination.from_pairs(left), LinearCombination.from_pairs(right)

    def pairing_check(self) -> Report:
        """Evaluating the dual coactions on group elements reproduces both actions."""
        report = Report(command="pairing")
        group = self.group
        left_failure = right_failure = None
        for b in self.arrows():
            for h in self.elements():
                left, _ = self.dual_coactions(self.left_action(h, b))
                if left_failure is None and not left.coefficient((DualBasisFunctional(h), b)).is_one():
                    left_failure = f"{b.label(group)}, h = {group.format_element(h)}"
                scalar, moved = self.right_action(b, h)
                _, right = self.dual_coactions(moved)
                if right_failure is None and right.coefficient((b, DualBasisFunctional(h))) != scalar:
                    right_failure = f"{b.label(group)}, h = {group.format_element(h)}"
        report.add("left_pairing", left_failure is None, witness=left_failure)
        report.add("right_pairing", right_failure is None, witness=right_failure)
        return report

    # ------------------------------------------------------------------ axioms

    def verify_bimodule(self) -> Report:
        """Exhaustive module, bimodule, Hopf-bimodule and pointedness checks."""
        group = self.group
        elements = self.elements()
        arrows = self.arrows()
        report = Report(command="verify-bimodule")
        failures: Dict[str, Optional[str]] = {name: None for name in (
            "left_action", "right_action", "bimodule", "left_coaction", "right_coaction")}

        def note(name: str, a: Arrow, *hs: Element) -> None:
            if failures[name] is None:
                failures[name] = f"{a.label(group)}; " + ", ".join(group.format_element(h) for h in hs)

        for a in arrows:
            if self.left_action(group.identity, a) != a:
                note("left_action", a, group.identity)
            if self.right_action(a, group.identity) != (Scalar.one(), a):
                note("right_action", a, group.identity)
            for h in elements:
                ha = self.left_action(h, a)
                s, ah = self.right_action(a, h)
                if ha.target != group.multiply(h, a.target) or ha.source != group.multiply(h, a.source):
                    note("left_coaction", a, h)
                if ah.target != group.multiply(a.target, h) or ah.source != group.multiply(a.source, h):
                    note("right_coaction", a, h)
                for k in elements:
                    hk = group.multiply(h, k)
                    if self.left_action(hk, a) != self.left_action(h, self.left_action(k, a)):
                        note("left_action", a, h, k)
                    s2, ahk = self.right_action(ah, k)
                    if self.right_action(a, hk) != (s * s2, ahk):
                        note("right_action", a, h, k)
                    s3, hak = self.right_action(ha, k)
                    s4, ak = self.right_action(a, k)
                    if (s3, hak) != (s4, self.left_action(h, ak)):
                        note("bimodule", a, h, k)
        for name, witness in failures.items():
            report.add(name, witness is None, witness=witness)
        round_trip = self.round_trip_check()
        report.add("pointed", round_trip.passed,
                   witness=None if round_trip.passed else round_trip.failures()[0].name)
        logger.info(f"Bimodule checks on {len(arrows)} arrows: {'pass' if report.passed else 'FAIL'}")
        return report


def coset_change_iso(b: ArrowBimodule, alt_reps: Sequence[CosetSystem]) -> Tuple[Dict[Arrow, Scalar], Report]:
    """
    The diagonal isomorphism f(a) = chi(g_theta h_theta^-1) a between the bimodules
    built from two coset representative systems, checked against both actions.

    Returns:
        Tuple[Dict[Arrow, Scalar], Report]: The map f on every arrow and the intertwining report.
    """
    group = b.group
    if not group.is_finite:
        raise UnsupportedGroupError("coset representative systems exist only for finite groups")
    if len(alt_reps) != len(b.cosets):
        raise ValueError(f"expected {len(b.cosets)} coset systems, got {len(alt_reps)}")
    alt = ArrowBimodule(b.rsc, alt_reps)
    f: Dict[Arrow, Scalar] = {}
    for a in b.arrows():
        g_theta = b.cosets[a.cls].reps[b.theta(a)]
        h_theta = alt.cosets[a.cls].reps[alt.theta(a)]
        f[a] = b.character(a)(group.multiply(g_theta, group.inverse(h_theta)))
    report = Report(command="coset-change")
    right_failure = left_failure = None
    for a in f:
        for h in b.elements():
            s, moved = b.right_action(a, h)
            s_alt, moved_alt = alt.right_action(a, h)
            if right_failure is None and (moved != moved_alt or s * f[moved] != f[a] * s_alt):
                right_failure = f"{a.label(group)}, h = {group.format_element(h)}"
            # f(h . a) = h . f(a), the left side acting in b and the right side in alt
            left, left_alt = b.left_action(h, a), alt.left_action(h, a)
            if left_failure is None and (left != left_alt or f[left] != f[a]):
                left_failure = f"{a.label(group)}, h = {group.format_element(h)}"
    report.add("right_intertwining", right_failure is None, witness=right_failure)
    report.add("left_intertwining", left_failure is None, witness=left_failure)
    report.results["nontrivial_scalars"] = sum(1 for s in f.values() if not s.is_one())
    logger.info(f"Coset change on {len(f)} arrows: {report.results['nontrivial_scalars']} nontrivial scalars")
    return f, report

# quiverhopf/core/algebras/verification.py
import logging
import time
from typing import Callable, Hashable, List, Optional, Tuple

from quiverhopf.core.algebras.base import GradedHopfAlgebra
from quiverhopf.core.linear import LinearCombination, rank
from quiverhopf.models.report import Report

# Configure logger
logger = logging.getLogger(__name__)


def _pairs(algebra: GradedHopfAlgebra, basis: List[Hashable], cutoff: int) -> List[Tuple[Hashable, Hashable]]:
    return [(u, v) for u in basis for v in basis if algebra.degree(u) + algebra.degree(v) <= cutoff]


def _coassociativity(algebra: GradedHopfAlgebra, b: Hashable) -> bool:
    delta = algebra.comultiply_basis(b)
    left = LinearCombination.from_pairs(
        (c * c2, (x, y, a2)) for (a1, a2), c in delta.items() for (x, y), c2 in algebra.comultiply_basis(a1).items())
    right = LinearCombination.from_pairs(
        (c * c2, (a1, x, y)) for (a1, a2), c in delta.items() for (x, y), c2 in algebra.comultiply_basis(a2).items())
    return left == right


def _counit(algebra: GradedHopfAlgebra, b: Hashable) -> bool:
    delta = algebra.comultiply_basis(b)
    left = LinearCombination.from_pairs((c * algebra.counit_basis(a1), a2) for (a1, a2), c in delta.items())
    right = LinearCombination.from_pairs((c * algebra.counit_basis(a2), a1) for (a1, a2), c in delta.items())
    expected = LinearCombination.monomial(b)
    return left == expected and right == expected


def _antipode(algebra: GradedHopfAlgebra, b: Hashable, side: str) -> bool:
    total = algebra.element_type()
    for (a1, a2), c in algebra.comultiply_basis(b).items():
        if side == "left":
            term = algebra.multiply(algebra.antipode_basis(a1), algebra.element(a2))
        else:
            term = algebra.multiply(algebra.element(a1), algebra.antipode_basis(a2))
        total = total + term.scale(c)
    return total == algebra.one().scale(algebra.counit_basis(b))


def verify_hopf_axioms(algebra: GradedHopfAlgebra, cutoff: int, associativity: bool = True,
                       command: Optional[str] = None) -> Report:
    """
    Checks the Hopf algebra axioms on every basis element (and pair, triple) of
    total degree at most cutoff.

    Args:
        algebra (GradedHopfAlgebra): The algebra to check.
        cutoff (int): Degree cutoff for elements and for products.
        associativity (bool): Whether to include the (more expensive) associativity check.
        command (str, optional): Name recorded in the report.

    Returns:
        Report: One check per axiom, with the first failing basis element as witness.
    """
    started = time.perf_counter()
    report = Report(command=command or f"verify-{algebra.name}")
    basis = algebra.basis(cutoff)
    pairs = _pairs(algebra, basis, cutoff)
    logger.info(f"Verifying {algebra.name}: {len(basis)} basis elements, {len(pairs)} pairs, cutoff {cutoff}")

    def first(predicate, items, render):
        for item in items:
            if not predicate(item):
                return render(item)
        return None

    def one(key):
        return algebra.render(key)

    def two(pair):
        return f"({algebra.render(pair[0])}, {algebra.render(pair[1])})"

    if associativity:
        triples = [(u, v, w) for (u, v) in pairs for w in basis
                   if algebra.degree(u) + algebra.degree(v) + algebra.degree(w) <= cutoff]
        witness = first(
            lambda t: algebra.multiply(algebra.multiply_basis(t[0], t[1]), algebra.element(t[2]))
            == algebra.multiply(algebra.element(t[0]), algebra.multiply_basis(t[1], t[2])),
            triples, lambda t: ", ".join(algebra.render(k) for k in t))
        report.add("associativity", witness is None, witness=witness)
    witness = first(lambda u: algebra.multiply_basis(algebra.unit_key(), u) == algebra.element(u)
                    and algebra.multiply_basis(u, algebra.unit_key()) == algebra.element(u), basis, one)
    report.add("unit", witness is None, witness=witness)
    witness = first(lambda b: _coassociativity(algebra, b), basis, one)
    report.add("coassociativity", witness is None, witness=witness)
    witness = first(lambda b: _counit(algebra, b), basis, one)
    report.add("counit", witness is None, witness=witness)
    witness = first(
        lambda p: algebra.comultiply(algebra.multiply_basis(*p))
        == algebra.tensor_multiply(algebra.comultiply_basis(p[0]), algebra.comultiply_basis(p[1])),
        pairs, two)
    report.add("comultiplication_multiplicative", witness is None, witness=witness)
    witness = first(
        lambda p: algebra.counit(algebra.multiply_basis(*p))
        == algebra.counit_basis(p[0]) * algebra.counit_basis(p[1]),
        pairs, two)
    report.add("counit_multiplicative", witness is None, witness=witness)
    witness = first(lambda b: _antipode(algebra, b, "left"), basis, one)
    report.add("antipode_left", witness is None, witness=witness)
    witness = first(lambda b: _antipode(algebra, b, "right"), basis, one)
    report.add("antipode_right", witness is None, witness=witness)

    report.results["basis_size"] = len(basis)
    report.results["cutoff"] = cutoff
    report.timing = time.perf_counter() - started
    if report.passed:
        logger.info(f"{algebra.name}: all Hopf axioms hold up to degree {cutoff}")
    else:
        logger.warning(f"{algebra.name}: failed checks {[c.name for c in report.failures()]}")
    return report


def verify_on_keys(algebra: GradedHopfAlgebra, keys: List[Hashable], command: str) -> Report:
    """Coalgebra and antipode laws on chosen basis keys, typically the generators."""
    report = Report(command=command)
    checks = (
        ("coassociativity", lambda b: _coassociativity(algebra, b)),
        ("counit", lambda b: _counit(algebra, b)),
        ("antipode_left", lambda b: _antipode(algebra, b, "left")),
        ("antipode_right", lambda b: _antipode(algebra, b, "right")),
    )
    for name, predicate in checks:
        witness = next((algebra.render(b) for b in keys if not predicate(b)), None)
        report.add(name, witness is None, witness=witness)
    report.results["keys"] = len(keys)
    return report


def compare_algebras(source: GradedHopfAlgebra, target: GradedHopfAlgebra,
                     phi: Callable[[Hashable], LinearCombination], cutoff: int, command: str) -> Report:
    """
    Checks that a map given on the basis of source is a bialgebra isomorphism onto
    target up to the cutoff: bijective on bases, multiplicative and comultiplicative.
    """
    started = time.perf_counter()
    report = Report(command=command)
    basis = source.basis(cutoff)
    images = {key: phi(key) for key in basis}

    def image_of(x: LinearCombination) -> LinearCombination:
        return x.map_linear(lambda key: images[key] if key in images else phi(key))

    def tensor_image(x: LinearCombination) -> LinearCombination:
        return LinearCombination.from_pairs(
            (c * ca * cb, (ka, kb))
            for (a, b), c in x.items()
            for ka, ca in image_of(source.element(a)).items()
            for kb, cb in image_of(source.element(b)).items())

    target_size = len(target.basis(cutoff))
    report.add("bijective_on_basis", rank(list(images.values())) == len(basis) == target_size,
               message=f"{len(basis)} source and {target_size} target basis elements")
    product_failure = coproduct_failure = None
    for u, v in _pairs(source, basis, cutoff):
        if image_of(source.multiply_basis(u, v)) != target.multiply(images[u], images[v]):
            product_failure = f"({source.render(u)}, {source.render(v)})"
            break
    for u in basis:
        if tensor_image(source.comultiply_basis(u)) != target.comultiply(images[u]):
            coproduct_failure = source.render(u)
            break
    report.add("multiplicative", product_failure is None, witness=product_failure)
    report.add("comultiplicative", coproduct_failure is None, witness=coproduct_failure)
    report.results["basis_size"] = len(basis)
    report.timing = time.perf_counter() - started
    logger.info(f"{command}: {source.name} -> {target.name} {'pass' if report.passed else 'FAIL'}")
    return report

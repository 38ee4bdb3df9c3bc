# quiverhopf/main.py
import logging
import random
import time
from typing import Callable, Optional

import click

from quiverhopf import config
from quiverhopf.core.algebras.copath import commutation_check, one_type_closure_check, product_along_powers
from quiverhopf.core.algebras.factory import ALGEBRA_KINDS, create_algebra
from quiverhopf.core.algebras.semipath import SemipathAlgebra, tensor_biproduct_check
from quiverhopf.core.algebras.taft import TaftAlgebra
from quiverhopf.core.algebras.verification import verify_hopf_axioms
from quiverhopf.core.bimodule import ArrowBimodule, coset_change_iso
from quiverhopf.core.group import Group
from quiverhopf.core.qcomb import q_factorial, s_m_polynomial
from quiverhopf.core.quantum_group import (
    fl_serre_checks,
    quantum_group_report,
    serre_primitive_check,
    skew_commutator_primitive_check,
)
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import classify_esc, classify_rsc, validate_fl
from quiverhopf.exceptions import QuiverHopfError, VerificationError
from quiverhopf.models.job import JobConfig
from quiverhopf.models.report import Report
from quiverhopf.models.structure import ESC, RSC, character_to_data
from quiverhopf.utils.literals import evaluate_literal
from quiverhopf.utils.loader import (
    build_cosets,
    build_esc,
    build_fl,
    build_group,
    build_rsc,
    build_structure,
    load_cartan,
    load_job,
    ramification,
)

# Configure logger
logger = logging.getLogger(__name__)

SUITES = ("hopf", "bimodule", "cosets", "confluence", "fl", "presentation", "commutation", "closure", "powers")


# ---------------------------------------------------------------------- helpers


def describe_rsc(rsc: RSC) -> str:
    group = rsc.group
    parts = [f"{group.format_element(c.representative)}: r={c.r}, chi={[character_to_data(ch) for ch in c.characters]}"
             for c in rsc.classes]
    return f"{rsc.name} " + "; ".join(parts)


def describe_esc(e: ESC) -> str:
    group = e.group
    items = [f"({group.format_element(g)}, {character_to_data(ch)})" for g, ch in zip(e.g, e.chi)]
    return f"{e.name} " + " ".join(items)


def _job(config_path: Optional[str]) -> JobConfig:
    if config_path is None:
        raise click.UsageError("this command needs --config PATH")
    return load_job(config_path)


def run_report(ctx: click.Context, command: Callable[[], Report]) -> None:
    """Runs a command and exits 0 if every check passed, 1 on failures, 2 on bad input."""
    try:
        start = time.perf_counter()
        report = command()
        report.timing = time.perf_counter() - start
    except VerificationError as e:
        logger.error(f"Verification failed: {str(e)}")
        click.echo(f"verification failed: {e}", err=True)
        if e.witness is not None:
            click.echo(f"  witness: {e.witness}", err=True)
        ctx.exit(1)
    except (QuiverHopfError, ValueError) as e:
        logger.error(f"Invalid input: {str(e)}")
        click.echo(f"error: {e}", err=True)
        ctx.exit(2)
    output_format = ctx.obj.get("format") or config.OUTPUT_FORMAT
    click.echo(report.to_json() if output_format == "json" else report.to_text())
    ctx.exit(0 if report.passed else 1)


def _use_job_format(ctx: click.Context, job: JobConfig) -> None:
    if ctx.obj.get("format") is None:
        ctx.obj["format"] = job.format


# ---------------------------------------------------------------------- CLI


@click.group()
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default=None,
              help="Output format (default: QHA_OUTPUT_FORMAT or the job's format).")
@click.option("--seed", type=int, default=None, help="Seed for randomized checks.")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=None, help="Logging level (default: QHA_LOG_LEVEL).")
@click.version_option(config.APP_VERSION, prog_name=config.APP_NAME)
@click.pass_context
def cli(ctx: click.Context, output_format: Optional[str], seed: Optional[int], log_level: Optional[str]):
    """Exact computations with quiver Hopf algebras."""
    config.setup_logging(log_level)
    config.print_config_info()
    ctx.ensure_object(dict)
    ctx.obj["format"] = output_format
    ctx.obj["seed"] = config.RANDOM_SEED if seed is None else seed


@cli.command()
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--m", type=int, default=None, help="Z2 with r = m at the identity class.")
@click.option("--expect", type=int, default=None, help="Expected number of classes.")
@click.option("--bound", type=int, default=None)
@click.pass_context
def classify(ctx, config_path, m, expect, bound):
    """Isomorphism classes of RSCs with a given ramification."""

    def command() -> Report:
        nonlocal expect, bound
        if config_path is not None:
            job = load_job(config_path)
            _use_job_format(ctx, job)
            group = build_group(job.group) if job.group else Group.cyclic(2)
            ram = ramification(job, group)
            expect = job.params.expect if expect is None else expect
            bound = job.params.bound if bound is None else bound
        elif m is not None:
            group = Group.cyclic(2)
            ram = {group.identity: m}
            expect = m + 1 if expect is None else expect
        else:
            raise click.UsageError("classify needs --config PATH or --m M")
        classes = classify_rsc(group, ram, bound)
        report = Report(command="classify")
        report.results["summary"] = f"{len(classes)} classes"
        report.results["structures"] = [describe_rsc(r) for r in classes]
        if expect is not None:
            report.add("count", len(classes) == expect, f"{len(classes)} classes, expected {expect}")
        return report

    run_report(ctx, command)


@cli.command("classify-esc")
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--size", type=int, default=None)
@click.option("--bound", type=int, default=None)
@click.pass_context
def classify_esc_command(ctx, config_path, size, bound):
    """Isomorphism classes of ESCs (multiple Taft algebras) of a given size."""

    def command() -> Report:
        job = _job(config_path)
        _use_job_format(ctx, job)
        n = size or job.params.size
        if n is None:
            raise click.UsageError("classify-esc needs --size or params.size")
        classes = classify_esc(build_group(job.group), n, bound or job.params.bound)
        report = Report(command="classify-esc")
        report.results["summary"] = f"{len(classes)} classes"
        report.results["structures"] = [describe_esc(e) for e in classes]
        if job.params.expect is not None:
            report.add("count", len(classes) == job.params.expect,
                       f"{len(classes)} classes, expected {job.params.expect}")
        return report

    run_report(ctx, command)


@cli.command()
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--kind", type=click.Choice(ALGEBRA_KINDS), default=None)
@click.option("--left", default=None, help="Left factor literal.")
@click.option("--right", default=None, help="Right factor literal.")
@click.option("--cutoff", type=int, default=None)
@click.pass_context
def multiply(ctx, config_path, kind, left, right, cutoff):
    """Product of two elements of a co-path, semi-path, Taft or braided algebra."""

    def command() -> Report:
        job = _job(config_path)
        _use_job_format(ctx, job)
        algebra = create_algebra(kind or job.params.kind or "copath", build_structure(job),
                                 cutoff if cutoff is not None else job.params.cutoff)
        left_text, right_text = left or job.params.left, right or job.params.right
        if left_text is None or right_text is None:
            raise click.UsageError("multiply needs --left and --right (or params.left/params.right)")
        x, y = evaluate_literal(algebra, left_text), evaluate_literal(algebra, right_text)
        report = Report(command=f"multiply-{algebra.name}")
        report.results["left"] = algebra.format(x)
        report.results["right"] = algebra.format(y)
        report.results["product"] = algebra.format(algebra.multiply(x, y))
        return report

    run_report(ctx, command)


@cli.command()
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--kind", type=click.Choice(ALGEBRA_KINDS), default=None)
@click.option("--cutoff", type=int, default=None)
@click.pass_context
def basis(ctx, config_path, kind, cutoff):
    """Basis of an algebra up to a degree (PBW basis for Taft algebras)."""

    def command() -> Report:
        job = _job(config_path)
        _use_job_format(ctx, job)
        top = cutoff if cutoff is not None else (job.params.cutoff if job.params.cutoff is not None
                                                 else config.DEGREE_CUTOFF)
        algebra = create_algebra(kind or job.params.kind or "taft", build_structure(job), top)
        if isinstance(algebra, SemipathAlgebra):
            keys = algebra.coinvariants_basis(top)
        elif isinstance(algebra, TaftAlgebra) and algebra.is_finite and cutoff is None:
            keys = algebra.pbw_basis(bound=job.params.bound)
        else:
            keys = algebra.basis(top)
        report = Report(command=f"basis-{algebra.name}")
        report.results["size"] = len(keys)
        report.results["basis"] = [algebra.render(k) for k in keys]
        return report

    run_report(ctx, command)


@cli.command()
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--bound", type=int, default=None)
@click.pass_context
def dimension(ctx, config_path, bound):
    """Dimension of a multiple Taft algebra, by formula and by PBW enumeration."""

    def command() -> Report:
        job = _job(config_path)
        _use_job_format(ctx, job)
        taft = TaftAlgebra(build_esc(job))
        formula = taft.dimension()
        report = Report(command="dimension")
        report.results["dimension"] = str(formula)
        report.results["orders"] = [str(n) for n in taft.orders]
        if taft.is_finite:
            enumerated = len(taft.pbw_basis(bound=bound or job.params.bound))
            report.add("pbw_enumeration", enumerated == formula, f"{enumerated} PBW monomials")
        if job.params.expect is not None:
            report.add("expected", formula == job.params.expect, f"expected {job.params.expect}")
        return report

    run_report(ctx, command)


@cli.command()
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--kind", type=click.Choice(ALGEBRA_KINDS), default=None)
@click.option("--suite", type=click.Choice(SUITES), default="hopf")
@click.option("--cutoff", type=int, default=None)
@click.option("--no-associativity", is_flag=True, default=False)
@click.pass_context
def verify(ctx, config_path, kind, suite, cutoff, no_associativity):
    """Verification suites: Hopf axioms, bimodule axioms, coset changes, confluence, FL types..."""

    def command() -> Report:
        job = _job(config_path)
        _use_job_format(ctx, job)
        top = cutoff if cutoff is not None else (job.params.cutoff if job.params.cutoff is not None
                                                 else config.DEGREE_CUTOFF)
        seed = ctx.obj["seed"]
        if suite == "hopf":
            algebra = create_algebra(kind or job.params.kind or "copath", build_structure(job), top)
            return verify_hopf_axioms(algebra, top, associativity=not no_associativity)
        elif suite == "bimodule":
            bimodule = ArrowBimodule(build_rsc(job))
            report = bimodule.verify_bimodule()
            report.extend(bimodule.pairing_check())
            report.extend(bimodule.round_trip_check())
            return report
        elif suite == "cosets":
            rsc = build_rsc(job)
            _, report = coset_change_iso(ArrowBimodule(rsc), build_cosets(job, rsc))
            return report
        elif suite == "confluence":
            return TaftAlgebra(build_esc(job), top).confluence_check(job.params.words, job.params.length, seed)
        elif suite == "fl":
            return validate_fl(build_fl(job))
        elif suite == "presentation":
            return TaftAlgebra(build_esc(job), top).presentation_check()
        elif suite == "commutation":
            return commutation_check(build_esc(job))
        elif suite == "closure":
            return one_type_closure_check(create_algebra("copath", build_structure(job), top), min(top, 2))
        return _powers_suite(job, top, seed)

    run_report(ctx, command)


def _powers_suite(job: JobConfig, cutoff: int, seed: int) -> Report:
    """Products of power arrows against the closed form, for random exponent tuples."""
    rsc = build_rsc(job)
    algebra = create_algebra("copath", rsc, cutoff)
    rng = random.Random(seed)
    m = min(job.params.m or 2, cutoff)
    trials = min(job.params.words, 10)
    report = Report(command="powers")
    for k, ramified in enumerate(rsc.classes):
        if not ramified.conj.is_singleton:
            continue
        for j in range(ramified.r):
            name = f"class{k + 1}.a{j + 1}"
            try:
                for _ in range(trials):
                    exponents = [rng.randint(-2, 2) for _ in range(m)]
                    product_along_powers(algebra, k, j, exponents)
            except VerificationError as e:
                report.add(name, False, str(e), witness=exponents)
                continue
            report.add(name, True, f"{trials} products of {m} arrows")
    return report


@cli.command()
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--cutoff", type=int, default=None)
@click.pass_context
def nichols(ctx, config_path, cutoff):
    """Primitives of the diagram of a multiple Taft algebra lie in degree 1."""

    def command() -> Report:
        job = _job(config_path)
        _use_job_format(ctx, job)
        return TaftAlgebra(build_esc(job)).nichols_check(cutoff if cutoff is not None else job.params.cutoff)

    run_report(ctx, command)


@cli.command("biproduct-check")
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--kind", type=click.Choice(["taft", "semipath"]), default="taft")
@click.option("--cutoff", type=int, default=None)
@click.pass_context
def biproduct_check(ctx, config_path, kind, cutoff):
    """Biproduct descriptions: R # kG against the Taft algebra, T # kG against kQ^s."""

    def command() -> Report:
        job = _job(config_path)
        _use_job_format(ctx, job)
        e = build_esc(job)
        top = cutoff if cutoff is not None else (job.params.cutoff if job.params.cutoff is not None else 3)
        if kind == "semipath":
            return tensor_biproduct_check(e, top)
        return TaftAlgebra(e, top).biproduct_check(top)

    run_report(ctx, command)


@cli.command()
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--cartan", default=None, help="Builtin Cartan name or Cartan file.")
@click.option("--r", "r_value", type=int, default=None)
@click.option("--skew", is_flag=True, default=False, help="Also check the skew commutator.")
@click.pass_context
def serre(ctx, config_path, cartan, r_value, skew):
    """Primitivity of q-Serre elements in the braided tensor algebra."""

    def command() -> Report:
        if cartan is not None:
            return fl_serre_checks(load_cartan(cartan))
        job = _job(config_path)
        _use_job_format(ctx, job)
        e = build_esc(job)
        if e.size < 2:
            raise click.UsageError("serre needs an ESC with two items")
        r = r_value or job.params.r
        if r is None:
            raise click.UsageError("serre needs --r or params.r")
        report = serre_primitive_check(e.group, e.g[0], e.g[1], e.chi[0], e.chi[1], r)
        if skew:
            beta = Scalar.coerce(job.params.beta) if job.params.beta is not None else Scalar.one()
            report.extend(skew_commutator_primitive_check(e.group, e.g[0], e.g[1], e.chi[0], e.chi[1], beta),
                          prefix="skew:")
        return report

    run_report(ctx, command)


@cli.command()
@click.option("--cartan", default=None, help="Builtin Cartan name (sl2, sl3, b2, ...) or Cartan file.")
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--cutoff", type=int, default=None)
@click.pass_context
def uq(ctx, cartan, config_path, cutoff):
    """The quantum group of FL data: presentation, Phi(I) = 0 and the round trips."""

    def command() -> Report:
        if cartan is not None:
            fl = load_cartan(cartan)
        else:
            job = _job(config_path)
            _use_job_format(ctx, job)
            fl = build_fl(job)
        return quantum_group_report(fl, cutoff)

    run_report(ctx, command)


@cli.command()
@click.option("--m", type=int, required=True)
@click.option("--n", type=int, default=None, help="Also evaluate S_m at a primitive n-th root of unity.")
@click.pass_context
def qfact(ctx, m, n):
    """(m)_q! against the inversion polynomial S_m."""

    def command() -> Report:
        q = Scalar.q()
        report = Report(command="qfact")
        factorial = q_factorial(m, q)
        report.results["(m)_q!"] = factorial.to_string()
        report.results["S_m(q)"] = s_m_polynomial(m, q).to_string()
        expected = q ** (m * (m - 1) // 2) * s_m_polynomial(m, q.inverse())
        report.add("factorial_identity", factorial == expected, "(m)_q! = q^(m(m-1)/2) S_m(q^-1)")
        if n is not None:
            value = s_m_polynomial(m, Scalar.zeta(n))
            report.results["S_m(zeta_n)"] = value.to_string()
            report.add("root_of_unity", value.is_zero() == (m >= n), f"S_{m}(zeta_{n}) = 0 iff {m} >= {n}")
        return report

    run_report(ctx, command)


def main():
    cli(obj={})


if __name__ == "__main__":
    main()

# scripts/run_fixtures.py
import logging
import shlex
import sys
from pathlib import Path

import click
from click.testing import CliRunner

from quiverhopf import config
from quiverhopf.main import cli
from quiverhopf.utils.loader import certified_statement, fixture_paths, read_yaml

# Configuración de logging
logging.basicConfig(level=logging.WARNING,
                    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


def expected_outcome(path: Path) -> str:
    """'fail' for negative controls marked with '# expect: fail', otherwise 'pass'."""
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            stripped = line.strip()
            if not stripped.startswith("#"):
                break
            if stripped.lower().startswith("# expect:"):
                return stripped.split(":", 1)[1].strip().lower()
    return "pass"


def fixture_args(path: Path) -> list:
    """CLI arguments for a fixture: its own command line, or 'uq --cartan' for bare Cartan files."""
    data = read_yaml(path)
    if "command" not in data:
        return ["uq", "--cartan", str(path)]
    args = shlex.split(data["command"])
    return args + ["--config", str(path)]


@click.command()
@click.option("--directory", type=click.Path(exists=True, file_okay=False), default=None,
              help="Fixture directory (default: QHA_FIXTURES_DIR).")
@click.option("--verbose", is_flag=True, default=False, help="Print every report.")
def main(directory, verbose):
    """Runs every shipped fixture through the CLI and prints a summary table."""
    runner = CliRunner(mix_stderr=False)
    rows = []
    for path in fixture_paths(directory or config.FIXTURES_DIR):
        args = fixture_args(path)
        result = runner.invoke(cli, args, obj={})
        expected = expected_outcome(path)
        outcome = "pass" if result.exit_code == 0 else ("fail" if result.exit_code == 1 else "error")
        ok = outcome == expected
        rows.append((path.name, outcome, expected, ok))
        if verbose or not ok:
            click.echo(f"--- {path.name}: {' '.join(args)}")
            click.echo(result.stdout)
            if result.stderr:
                click.echo(result.stderr, err=True)
        logger.info(f"{path.name}: {certified_statement(path)}")

    width = max((len(name) for name, _, _, _ in rows), default=10)
    click.echo(f"{'fixture'.ljust(width)}  outcome  expected")
    for name, outcome, expected, ok in rows:
        mark = "" if ok else "  <-- unexpected"
        click.echo(f"{name.ljust(width)}  {outcome.ljust(7)}  {expected}{mark}")
    failed = sum(1 for row in rows if not row[3])
    click.echo(f"{len(rows) - failed}/{len(rows)} fixtures as expected")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()

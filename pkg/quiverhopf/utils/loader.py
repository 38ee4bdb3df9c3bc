# quiverhopf/utils/loader.py
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml
from pydantic import ValidationError

from quiverhopf import config
from quiverhopf.core.group import CosetSystem, Group, class_of
from quiverhopf.core.quantum_group import cartan_by_name, cartan_to_esc
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import esc_to_crsc
from quiverhopf.exceptions import ConfigError
from quiverhopf.models.fl_data import FLData
from quiverhopf.models.job import CartanSpec, GroupSpec, JobConfig
from quiverhopf.models.structure import ESC, RSC

# Configure logger
logger = logging.getLogger(__name__)


def read_yaml(path: Union[str, Path]) -> Any:
    """Reads a YAML (or JSON) file; unreadable files raise ConfigError."""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f)
    except FileNotFoundError:
        logger.error(f"Config file not found: {path}")
        raise ConfigError(f"config file not found: {path}")
    except yaml.YAMLError as e:
        logger.error(f"Error parsing {path}: {str(e)}")
        raise ConfigError(f"invalid YAML in {path}: {e}") from e


def certified_statement(path: Union[str, Path]) -> Optional[str]:
    """The statement named in the '# certifies:' header comment of a fixture."""
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            stripped = line.strip()
            if not stripped.startswith("#"):
                break
            if stripped.lower().startswith("# certifies:"):
                return stripped.split(":", 1)[1].strip()
    return None


def parse_job(data: Any) -> JobConfig:
    if not isinstance(data, dict):
        raise ConfigError("a job config must be a mapping")
    try:
        return JobConfig.model_validate(data)
    except ValidationError as e:
        logger.error(f"Invalid job config: {e.error_count()} errors")
        raise ConfigError(f"invalid job config:\n{e}") from e


def load_job(path: Union[str, Path]) -> JobConfig:
    """Reads and validates a job config file."""
    job = parse_job(read_yaml(path))
    logger.info(f"Loaded job config {path}")
    return job


def build_group(spec: GroupSpec) -> Group:
    try:
        if spec.kind == "cyclic":
            return Group.cyclic(spec.n)
        elif spec.kind == "abelian":
            return Group.abelian(spec.factors)
        elif spec.kind == "free_abelian":
            return Group.free_abelian(spec.rank)
        elif spec.kind == "symmetric":
            return Group.symmetric(spec.n)
        return Group.cayley(spec.table, spec.identity, spec.name or "G")
    except ValueError as e:
        logger.error(f"Error building group: {str(e)}")
        raise ConfigError(f"invalid group: {e}") from e


def _require_group(job: JobConfig) -> Group:
    if job.group is None:
        raise ConfigError("this command needs a group section")
    return build_group(job.group)


def build_rsc(job: JobConfig) -> RSC:
    """The RSC of the job, or the central RSC of its ESC."""
    if job.rsc is None:
        return esc_to_crsc(build_esc(job))
    group = _require_group(job)
    try:
        return RSC.from_dict(job.rsc.model_dump(exclude_none=True), group)
    except (ValueError, KeyError) as e:
        logger.error(f"Error building RSC: {str(e)}")
        raise ConfigError(f"invalid rsc: {e}") from e


def build_esc(job: JobConfig) -> ESC:
    if job.esc is None:
        if job.cartan is not None:
            return build_fl(job).esc
        raise ConfigError("this command needs an esc section")
    group = _require_group(job)
    try:
        return ESC.from_dict(job.esc.model_dump(exclude_none=True), group)
    except (ValueError, KeyError) as e:
        logger.error(f"Error building ESC: {str(e)}")
        raise ConfigError(f"invalid esc: {e}") from e


def build_structure(job: JobConfig) -> Union[RSC, ESC]:
    return build_rsc(job) if job.rsc is not None else build_esc(job)


def cartan_data(cartan: Union[str, CartanSpec]) -> Tuple[List[List[int]], Optional[List[int]], Optional[Scalar], str]:
    """(A, d, q, name) of a builtin name or a Cartan spec."""
    if isinstance(cartan, str):
        matrix, d = cartan_by_name(cartan)
        return matrix, d, None, cartan
    q = Scalar.coerce(cartan.q) if cartan.q is not None else None
    return cartan.matrix, cartan.d, q, cartan.name or "cartan"


def build_fl(job: JobConfig) -> FLData:
    """FL data from the cartan section, or from the esc and fl sections."""
    if job.cartan is not None:
        matrix, d, q, name = cartan_data(job.cartan)
        return cartan_to_esc(matrix, d, q, name)
    if job.fl is None:
        raise ConfigError("this command needs a cartan section or esc and fl sections")
    group = _require_group(job)
    data: Dict[str, Any] = job.fl.model_dump()
    data["esc"] = job.esc.model_dump(exclude_none=True)
    try:
        return FLData.from_dict(data, group)
    except (ValueError, KeyError) as e:
        logger.error(f"Error building FL data: {str(e)}")
        raise ConfigError(f"invalid fl data: {e}") from e


def load_cartan(source: str) -> FLData:
    """FL data of a builtin Cartan name (sl3, b2, ...) or of a Cartan file."""
    path = Path(source)
    if not path.exists():
        matrix, d, q, name = cartan_data(source)
        return cartan_to_esc(matrix, d, q, name)
    data = read_yaml(path)
    if isinstance(data, dict) and "cartan" in data:
        return build_fl(parse_job(data))
    try:
        spec = CartanSpec.model_validate(data)
    except ValidationError as e:
        logger.error(f"Invalid Cartan file {path}")
        raise ConfigError(f"invalid Cartan data:\n{e}") from e
    matrix, d, q, name = cartan_data(spec)
    return cartan_to_esc(matrix, d, q, spec.name or path.stem)


def build_cosets(job: JobConfig, rsc: RSC) -> List[CosetSystem]:
    """Alternative coset systems, one per ramified class, in class order."""
    group = rsc.group
    by_rep = {}
    for spec in job.cosets:
        rep = group.parse_element(spec.rep)
        by_rep[rep] = [group.parse_element(x) for x in spec.reps]
    systems = []
    for ramified in rsc.classes:
        reps = by_rep.get(ramified.representative)
        if reps is None:
            systems.append(CosetSystem.standard(group, ramified.conj))
            continue
        try:
            systems.append(CosetSystem.from_reps(group, ramified.conj, reps))
        except ValueError as e:
            raise ConfigError(f"invalid coset representatives: {e}") from e
    return systems


def ramification(job: JobConfig, group: Group) -> Dict[Any, int]:
    """params.ramification as a map from class representatives to r_C."""
    result = {}
    for literal, r in job.params.ramification.items():
        x = group.parse_element(literal)
        if group.is_finite and any(class_of(group, y).representative == class_of(group, x).representative
                                   for y in result):
            raise ConfigError(f"{literal} repeats a conjugacy class")
        result[x] = r
    return result


def fixture_paths(directory: Optional[Union[str, Path]] = None) -> List[Path]:
    """Every shipped fixture, sorted by file name."""
    directory = Path(directory or config.FIXTURES_DIR)
    return sorted(list(directory.glob("*.yaml")) + list(directory.glob("*.json")))

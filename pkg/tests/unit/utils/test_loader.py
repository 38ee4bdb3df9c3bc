import pytest
import yaml

from quiverhopf.core.group import Group
from quiverhopf.exceptions import ConfigError
from quiverhopf.models.job import GroupSpec
from quiverhopf.utils.loader import (
    build_cosets,
    build_esc,
    build_fl,
    build_group,
    build_rsc,
    certified_statement,
    fixture_paths,
    load_cartan,
    load_job,
    parse_job,
    ramification,
    read_yaml,
)


def write_yaml(path, data, header=""):
    path.write_text(header + yaml.safe_dump(data), encoding="utf-8")
    return path


class TestReading:

    def test_missing_file(self, tmp_path):
        """Test that a missing file raises ConfigError"""
        with pytest.raises(ConfigError):
            read_yaml(tmp_path / "missing.yaml")

    def test_invalid_yaml(self, tmp_path):
        """Test that malformed YAML raises ConfigError"""
        path = tmp_path / "bad.yaml"
        path.write_text("group: [cyclic\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            read_yaml(path)

    def test_not_a_mapping(self):
        """Test that a job must be a mapping"""
        with pytest.raises(ConfigError):
            parse_job([1, 2])

    def test_schema_errors(self):
        """Test that schema violations surface as ConfigError"""
        with pytest.raises(ConfigError):
            parse_job({"group": {"kind": "cyclic"}})

    def test_certified_statement(self, tmp_path):
        """Test reading the header comment of a fixture"""
        path = write_yaml(tmp_path / "job.yaml", {"command": "classify"},
                          header="# certifies: Z2 with r = 3 has 4 classes\n# expect: pass\n")
        assert certified_statement(path) == "Z2 with r = 3 has 4 classes"
        assert load_job(path).command == "classify"


class TestBuilding:

    @pytest.mark.parametrize("spec,order", [
        ({"kind": "cyclic", "n": 4}, 4),
        ({"kind": "abelian", "factors": [2, 3]}, 6),
        ({"kind": "symmetric", "n": 3}, 6),
        ({"kind": "cayley", "table": [[0, 1], [1, 0]]}, 2),
    ])
    def test_groups(self, spec, order):
        """Test every finite group kind"""
        assert build_group(GroupSpec(**spec)).order == order

    def test_invalid_abelian_factor(self):
        """Test that invalid invariant factors raise ConfigError"""
        with pytest.raises(ConfigError):
            build_group(GroupSpec(kind="abelian", factors=[1]))

    def test_rsc(self):
        """Test an RSC section with exponent characters"""
        job = parse_job({"group": {"kind": "cyclic", "n": 2},
                         "rsc": {"classes": [{"rep": "1", "r": 2, "chars": [[0], [1]]}]}})
        rsc = build_rsc(job)
        assert rsc.total_rank == 2
        assert rsc.is_central()

    def test_rsc_from_esc(self):
        """Test that an ESC job yields its central RSC"""
        job = parse_job({"group": {"kind": "cyclic", "n": 3},
                         "esc": {"items": [{"g": "g", "chi": [1]}]}})
        assert build_esc(job).size == 1
        assert build_rsc(job).total_rank == 1

    def test_invalid_rsc(self):
        """Test that mathematical errors in an RSC raise ConfigError"""
        job = parse_job({"group": {"kind": "cyclic", "n": 2},
                         "rsc": {"classes": [{"rep": "1", "r": 2, "chars": [[0]]}]}})
        with pytest.raises(ConfigError):
            build_rsc(job)

    def test_esc_missing(self):
        """Test that an ESC command without an esc section fails"""
        with pytest.raises(ConfigError):
            build_esc(parse_job({"group": {"kind": "cyclic", "n": 2}}))

    def test_fl_from_sections(self):
        """Test FL data written out by hand"""
        job = parse_job({
            "group": {"kind": "free_abelian", "rank": 1},
            "esc": {"items": [{"label": "1", "g": "g^[2]", "chi": ["v**-2"]},
                              {"label": "1'", "g": "g^[2]", "chi": ["v**2"]}]},
            "fl": {"blocks": [{"j1": [0], "j2": [1], "cartan": [[2]], "d": [1]}], "xi": ["g^[1]", "g^[-1]"]},
        })
        fl = build_fl(job)
        assert fl.sigma(0) == 1
        assert fl.xi == [(1,), (-1,)]

    def test_fl_from_cartan(self):
        """Test that a cartan section builds the quantum group data"""
        fl = build_fl(parse_job({"cartan": {"A": [[2, -1], [-1, 2]]}}))
        assert fl.esc.size == 4

    def test_fl_missing(self):
        """Test that FL commands need cartan or fl data"""
        with pytest.raises(ConfigError):
            build_fl(parse_job({}))


class TestCartanSources:

    def test_builtin_name(self):
        """Test a builtin Cartan name"""
        assert load_cartan("sl3").esc.name == "sl3"

    def test_unknown_name(self):
        """Test that unknown names raise ValueError"""
        with pytest.raises(ValueError):
            load_cartan("f4")

    def test_cartan_file(self, tmp_path):
        """Test a bare Cartan file named after its stem"""
        path = write_yaml(tmp_path / "b2.yaml", {"A": [[2, -2], [-1, 2]], "d": [1, 2]})
        fl = load_cartan(str(path))
        assert fl.esc.name == "b2"
        assert fl.r == {(0, 1): 3, (1, 0): 2}

    def test_invalid_cartan_file(self, tmp_path):
        """Test that a malformed Cartan file raises ConfigError"""
        path = write_yaml(tmp_path / "bad.yaml", {"A": [[2, -1]]})
        with pytest.raises(ConfigError):
            load_cartan(str(path))


class TestCosetsAndRamification:

    def test_alternative_cosets(self):
        """Test that listed representatives replace the standard system"""
        job = parse_job({"group": {"kind": "symmetric", "n": 3},
                         "rsc": {"classes": [{"rep": "#1", "chars": [{"#0": "1", "#1": "-1"}]}]},
                         "cosets": [{"rep": "#1", "reps": ["#1", "#4", "#5"]}]})
        (system,) = build_cosets(job, build_rsc(job))
        assert list(system.reps) == [1, 4, 5]

    def test_invalid_cosets(self):
        """Test that representatives of the same coset are rejected"""
        job = parse_job({"group": {"kind": "symmetric", "n": 3},
                         "rsc": {"classes": [{"rep": "#1", "chars": [{"#0": "1", "#1": "-1"}]}]},
                         "cosets": [{"rep": "#1", "reps": ["#0", "#1", "#2"]}]})
        with pytest.raises(ConfigError):
            build_cosets(job, build_rsc(job))

    def test_ramification(self):
        """Test parsing the ramification map"""
        group = Group.cyclic(2)
        job = parse_job({"params": {"ramification": {"1": 3, "g": 1}}})
        assert ramification(job, group) == {(0,): 3, (1,): 1}

    def test_repeated_class(self):
        """Test that two representatives of one class are rejected"""
        job = parse_job({"params": {"ramification": {"#1": 1, "#2": 1}}})
        with pytest.raises(ConfigError):
            ramification(job, Group.symmetric(3))


def test_shipped_fixtures():
    """Test that every shipped fixture parses and names what it certifies"""
    paths = fixture_paths()
    assert len(paths) >= 20
    for path in paths:
        data = read_yaml(path)
        if "A" in data:
            load_cartan(str(path))
            continue
        assert certified_statement(path), path.name
        parse_job(data)

import unittest

from pydantic import ValidationError

from quiverhopf.models.job import CartanSpec, FLSpec, GroupSpec, JobConfig, ParamsSpec


class TestJobConfig(unittest.TestCase):
    """Tests para los esquemas de configuracion de trabajos."""

    def test_minimal_job(self):
        """Verifica los valores por defecto de un trabajo vacio."""
        job = JobConfig.model_validate({})
        self.assertIsNone(job.command)
        self.assertEqual(job.scalar, "auto")
        self.assertEqual(job.format, "text")
        self.assertEqual(job.params.words, 200)

    def test_rsc_job(self):
        """Verifica que se acepta un RSC con grupo."""
        job = JobConfig.model_validate({
            "command": "verify --suite hopf",
            "group": {"kind": "cyclic", "n": 2},
            "rsc": {"classes": [{"rep": 1, "r": 2, "chars": [[0], [1]]}]},
        })
        self.assertEqual(job.rsc.classes[0].rep, "1")
        self.assertEqual(job.group.n, 2)

    def test_structure_needs_group(self):
        """Verifica que rsc y esc requieren la seccion group."""
        with self.assertRaises(ValidationError):
            JobConfig.model_validate({"esc": {"items": [{"g": "g", "chi": [1]}]}})

    def test_rsc_and_esc_exclusive(self):
        """Verifica que no se pueden dar rsc y esc a la vez."""
        with self.assertRaises(ValidationError):
            JobConfig.model_validate({
                "group": {"kind": "cyclic", "n": 2},
                "rsc": {"classes": [{"rep": "1", "chars": [[0]]}]},
                "esc": {"items": [{"g": "g", "chi": [1]}]},
            })

    def test_fl_needs_esc(self):
        """Verifica que la seccion fl requiere un esc."""
        with self.assertRaises(ValidationError):
            JobConfig.model_validate({
                "group": {"kind": "free_abelian", "rank": 1},
                "fl": {"blocks": [{"j1": [0], "j2": [1], "cartan": [[2]], "d": [1]}], "xi": ["g^[1]"]},
            })

    def test_unknown_field(self):
        """Verifica que se rechazan campos desconocidos."""
        with self.assertRaises(ValidationError):
            JobConfig.model_validate({"scalars": "auto"})


class TestSpecs(unittest.TestCase):
    """Tests para las secciones individuales."""

    def test_group_required_fields(self):
        """Verifica los campos requeridos por cada tipo de grupo."""
        with self.assertRaises(ValidationError):
            GroupSpec(kind="cyclic")
        with self.assertRaises(ValidationError):
            GroupSpec(kind="free_abelian")
        self.assertEqual(GroupSpec(kind="abelian", factors=[2, 2]).factors, [2, 2])

    def test_cartan_alias(self):
        """Verifica el alias A de la matriz de Cartan."""
        spec = CartanSpec.model_validate({"A": [[2, -2], [-1, 2]], "d": [1, 2], "q": 2})
        self.assertEqual(spec.matrix, [[2, -2], [-1, 2]])
        self.assertEqual(spec.q, "2")

    def test_cartan_not_square(self):
        """Verifica que la matriz debe ser cuadrada."""
        with self.assertRaises(ValidationError):
            CartanSpec.model_validate({"A": [[2, -1]]})

    def test_cartan_symmetrizer_length(self):
        """Verifica la longitud de los simetrizadores."""
        with self.assertRaises(ValidationError):
            CartanSpec.model_validate({"A": [[2]], "d": [1, 1]})

    def test_fl_block_sizes(self):
        """Verifica que j1, j2, d y la matriz tienen el mismo tamano."""
        with self.assertRaises(ValidationError):
            FLSpec.model_validate({"blocks": [{"j1": [0], "j2": [1, 2], "cartan": [[2]], "d": [1]}], "xi": []})

    def test_fl_r_triples(self):
        """Verifica el formato de las ternas r."""
        with self.assertRaises(ValidationError):
            FLSpec.model_validate({"blocks": [{"j1": [0], "j2": [1], "cartan": [[2]], "d": [1]}],
                                   "xi": [], "r": [[0, 1]]})

    def test_negative_ramification(self):
        """Verifica que la ramificacion no puede ser negativa."""
        with self.assertRaises(ValidationError):
            ParamsSpec(ramification={"1": -1})


if __name__ == '__main__':
    unittest.main()

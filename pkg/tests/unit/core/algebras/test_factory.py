import unittest
from unittest.mock import patch

from quiverhopf.core.algebras.copath import CopathAlgebra
from quiverhopf.core.algebras.factory import create_algebra
from quiverhopf.core.algebras.semipath import SemipathAlgebra
from quiverhopf.core.algebras.taft import TaftAlgebra
from quiverhopf.core.braided import Biproduct, BraidedAlgebra
from quiverhopf.core.group import Character, Group
from quiverhopf.core.scalar import Scalar
from quiverhopf.core.structure import example_rsc_z2
from quiverhopf.models.structure import ESC


class TestAlgebraFactory(unittest.TestCase):
    """Tests para el factory de algebras."""

    def setUp(self):
        group = Group.cyclic(3)
        self.esc = ESC.from_items(group, [((1,), Character.from_values(group, [Scalar.zeta(3)]))])

    def test_create_copath_from_rsc(self):
        """Verifica que se crea el algebra de co-caminos de un RSC."""
        algebra = create_algebra("copath", example_rsc_z2(2, 1), cutoff=2)
        self.assertIsInstance(algebra, CopathAlgebra)
        self.assertEqual(algebra.cutoff, 2)

    def test_create_copath_from_esc(self):
        """Verifica que un ESC se convierte a su RSC central."""
        algebra = create_algebra("copath", self.esc, cutoff=2)
        self.assertIsInstance(algebra, CopathAlgebra)

    def test_create_semipath(self):
        """Verifica que se crea el algebra de semi-caminos."""
        algebra = create_algebra("semipath", self.esc, cutoff=2)
        self.assertIsInstance(algebra, SemipathAlgebra)
        self.assertEqual(algebra.labels, ["E1"])

    def test_create_taft(self):
        """Verifica que se crea el algebra de Taft."""
        self.assertIsInstance(create_algebra("taft", self.esc), TaftAlgebra)

    def test_create_braided(self):
        """Verifica los tres sabores trenzados y el biproducto."""
        for kind in ("tensor", "symmetric", "linear"):
            algebra = create_algebra(kind, self.esc, cutoff=2)
            self.assertIsInstance(algebra, BraidedAlgebra)
            self.assertEqual(algebra.flavor, kind)
        self.assertIsInstance(create_algebra("biproduct", self.esc, cutoff=2), Biproduct)

    @patch('quiverhopf.core.algebras.factory.config')
    def test_default_cutoff(self, mock_config):
        """Verifica que se usa el corte de grado de la configuracion."""
        mock_config.DEGREE_CUTOFF = 5
        algebra = create_algebra("semipath", self.esc)
        self.assertEqual(algebra.cutoff, 5)

    def test_esc_only_kind_with_rsc(self):
        """Verifica que los tipos que requieren un ESC rechazan un RSC."""
        with self.assertRaises(ValueError):
            create_algebra("taft", example_rsc_z2(1, 0))

    def test_invalid_algebra_type(self):
        """Verifica que se lanza una excepcion con un tipo de algebra invalido."""
        with self.assertRaises(ValueError):
            create_algebra("invalid_type", self.esc)


if __name__ == '__main__':
    unittest.main()

import io
import os
import shutil
import tempfile
import unittest
from unittest import mock
from contextlib import redirect_stderr
from tqdm import tqdm
from ..tools.options import Options
from ..tools.printer import Printer
from ..tools.system import parse_system
from ..semantics.kripke import enumerate_fixed_points

OPTIONS = '''# truthbench options
bar_mode = on
verbosity = 2
kripke.cap = 5
calculus.reflection = yes
calculus.depth = deep
calculus.budget = 1000 # nodes
nonsense.cap = 3
kripke.width = 3
colour = red
a = b = c
novalue
'''


class Test(unittest.TestCase):
    def setUp(self):
        self.test_dir = tempfile.mkdtemp(prefix = 'truthbench_unittest_')
        self.options_file = os.path.join(self.test_dir, 'truthbench')

    def tearDown(self):
        shutil.rmtree(self.test_dir)

    def read(self, text):
        with open(self.options_file, 'w') as out_file:
            out_file.write(text)
        with mock.patch.object(Options, '_options_file', self.options_file):
            return Options()

    def test_defaults(self):
        with mock.patch.object(Options, '_options_file', os.path.join(self.test_dir, 'missing')):
            options = Options()
        self.assertFalse(options.bar_mode)
        self.assertEqual(options.verbosity, 1)
        self.assertEqual(options.get('kripke', 'cap'), 12)
        self.assertEqual(options.get('calculus', 'depth'), 1)
        self.assertEqual(options.get('calculus', 'budget'), 200000)
        self.assertFalse(options.get('calculus', 'reflection'))

    def test_options_file(self):
        with self.assertLogs('truthbench', level = 'WARNING') as logs:
            options = self.read(OPTIONS)
        self.assertTrue(options.bar_mode)
        self.assertEqual(options['verbosity'], 2)
        self.assertEqual(options.get('kripke', 'cap'), 5)
        self.assertIs(options.get('calculus', 'reflection'), True)
        ## Bad values keep the default
        self.assertEqual(options.get('calculus', 'depth'), 1)
        self.assertEqual(options.get('calculus', 'budget'), 1000)
        self.assertNotIn('colour', options)
        output = '\n'.join(logs.output)
        for message in ['unknown domain "nonsense"', 'Unknown option "width" for domain "kripke"', 'Unknown general option "colour"',
                        'Bad value "deep"', 'too many "=" delimiter', 'missing "=" delimiter']:
            self.assertIn(message, output)

    def test_precedence(self):
        options = self.read('kripke.cap = 5\n')
        system = parse_system('option cap = 7\nsentence L := ~T(L)')
        self.assertEqual(options.get('kripke', 'cap'), 5)
        self.assertEqual(options.get('kripke', 'cap', system), 7)
        self.assertEqual(options.get('kripke', 'cap', system, 3), 3)
        self.assertEqual(options.get('kripke', 'cap', parse_system('sentence L := ~T(L)')), 5)

    def test_progress(self):
        items = list(range(5))
        self.assertIs(Printer().progress(items, total = 5, desc = 'items'), items)
        self.assertIs(Printer(verbosity = 0, bar_mode = True).progress(items, total = 5, desc = 'items'), items)
        with redirect_stderr(io.StringIO()):
            bar = Printer(bar_mode = True).progress(iter(items), total = 5, desc = 'items')
            self.assertIsInstance(bar, tqdm)
            self.assertEqual(list(bar), items)

    def test_progress_enumeration(self):
        ## The progress bar does not change the enumeration
        system = parse_system('sentence K := T(K)\nsentence L := ~T(L)')
        with redirect_stderr(io.StringIO()):
            with_bar = enumerate_fixed_points(system, printer = Printer(bar_mode = True))
        self.assertEqual(with_bar, enumerate_fixed_points(system, printer = Printer()))
        self.assertEqual(len(with_bar), 3)

if __name__ == '__main__':
    unittest.main()

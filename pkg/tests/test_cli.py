import io
import json
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from circulant.cli import main
from circulant.cli.commands import \
    EXIT_OK, EXIT_UNSUPPORTED, EXIT_USAGE, EXIT_VIOLATION, parse_orders
from circulant.core.config import DEFAULTS, load_config
from circulant.core.enumerators import SD, count
from circulant.core.validation import ValidationError

def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = main(list(argv))
    return code, stdout.getvalue()

def json_lines(output):
    return list(json.loads(line) for line in output.splitlines())

class CliTestCase(unittest.TestCase):

    def setUp(self):
        self._environ = dict(os.environ)
        os.environ.pop('CIRCULANT_CONFIG', None)
        os.environ.pop('CIRCULANT_FORMAT', None)

    def tearDown(self):
        os.environ.clear()
        os.environ.update(self._environ)

class TestCount(CliTestCase):

    def test_text(self):
        code, output = run('count', '--order', '13', '--class', 'sd')

        self.assertEqual(EXIT_OK, code)
        self.assertEqual('8 (formula)\n', output)

    def test_valency(self):
        code, output = run('count', '--order', '7', '--class', 'u', '--poly', '--valency', '2')

        self.assertEqual(EXIT_OK, code)
        self.assertEqual(['4 (formula)', '1 + z^2 + z^4 + z^6 (formula)', 'r=2: 1 (formula)'],
                         output.splitlines())

    def test_json(self):
        code, output = run('--format', 'json', 'count', '--order', '169', '--class', 'sd')
        records = json_lines(output)

        self.assertEqual(EXIT_OK, code)
        self.assertEqual(1, len(records))
        self.assertEqual(str(count(169, SD).total), records[0]['total'])
        self.assertEqual('formula', records[0]['provenance'])
        self.assertEqual('sd', records[0]['class'])
        self.assertIsNone(records[0]['by_valency'])

    def test_json_record_shape(self):
        _, output = run('--format', 'json', 'count', '--order', '7', '--class', 'u')
        record = json_lines(output)[0]

        self.assertEqual(['1', '0', '1', '0', '1', '0', '1'], record['by_valency'])
        self.assertEqual(count(7, 'u').to_json(), record)

        _, output = run('--format', 'json', 'count', '--order', '13', '--class', 't')
        self.assertEqual(count(13, 't').to_json(), json_lines(output)[0])

    def test_format_environment(self):
        os.environ['CIRCULANT_FORMAT'] = 'csv'
        code, output = run('count', '--order', '13', '--class', 'sd')

        self.assertEqual(EXIT_OK, code)
        self.assertEqual(['order,class,total,provenance,by_valency', '13,sd,8,formula,'],
                         output.splitlines())

    def test_unsupported(self):
        code, output = run('count', '--order', '15', '--class', 'd')

        self.assertEqual(EXIT_UNSUPPORTED, code)
        self.assertEqual('', output)

    def test_oracle(self):
        code, output = run('count', '--order', '15', '--class', 'u', '--oracle')

        self.assertEqual(EXIT_OK, code)
        self.assertEqual('44 (oracle)\n', output)

    def test_oracle_provenance_at_formula_orders(self):
        code, output = run('count', '--order', '13', '--class', 'sd', '--oracle')
        self.assertEqual('8 (oracle)\n', output)

    def test_usage(self):
        self.assertEqual(EXIT_USAGE, run('count', '--order', '13', '--class', 'x')[0])
        self.assertEqual(EXIT_USAGE, run('count', '--order', '0', '--class', 'd')[0])
        self.assertEqual(EXIT_USAGE, run('count', '--order', '13')[0])
        self.assertEqual(EXIT_USAGE, run('count', '--order', '13', '--class', 'sd', '--poly')[0])
        self.assertEqual(EXIT_USAGE, run('frobnicate')[0])

    def test_bad_config(self):
        code, _ = run('--config', '/nonexistent/circulant.json', 'count', '--order', '5',
                      '--class', 'd')
        self.assertEqual(EXIT_USAGE, code)

class TestWriteConfig(CliTestCase):

    def setUp(self):
        super(TestWriteConfig, self).setUp()
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)
        super(TestWriteConfig, self).tearDown()

    def test_effective_configuration(self):
        path = os.path.join(self.directory, 'effective.json')
        code, output = run('--format', 'csv', '--mr-rounds', '12', '--write-config', path,
                           'count', '--order', '13', '--class', 'sd')

        self.assertEqual(EXIT_OK, code)
        self.assertEqual('13,sd,8,formula,', output.splitlines()[1])
        self.assertEqual(dict(DEFAULTS, format='csv', mr_rounds=12), load_config(path))

    def test_invalid(self):
        path = os.path.join(self.directory, 'invalid.json')
        code, output = run('--mr-rounds', '0', '--write-config', path,
                           'count', '--order', '13', '--class', 'sd')

        self.assertEqual(EXIT_USAGE, code)
        self.assertEqual('', output)
        self.assertFalse(os.path.exists(path))

        path = os.path.join(self.directory, 'missing', 'config.json')
        self.assertEqual(EXIT_USAGE, run('--write-config', path, 'count', '--order', '13',
                                         '--class', 'sd')[0])

class TestTable(CliTestCase):

    def test_table_one_csv(self):
        code, output = run('--format', 'csv', 'table', '1', '--orders', '7,13')
        lines = output.splitlines()

        self.assertEqual(EXIT_OK, code)
        self.assertEqual('n,C_d,C_u,C_o,C_sd,C_su,C_t,provenance', lines[0])
        self.assertTrue(lines[1].startswith('7,14,4,'))
        self.assertTrue(lines[2].startswith('13,352,'))
        self.assertTrue(lines[2].endswith(',formula'))

    def test_strict(self):
        self.assertEqual(EXIT_UNSUPPORTED, run('table', '1', '--orders', '50', '--strict')[0])

        code, output = run('table', '1', '--orders', '50')
        self.assertEqual(EXIT_OK, code)
        self.assertIn('n/a', output)

    def test_table_one_json_missing(self):
        code, output = run('--format', 'json', 'table', '1', '--orders', '12')
        record = json_lines(output)[0]

        self.assertIsNone(record['C_d'])
        self.assertEqual('n/a', record['provenance'])

    def test_table_two_csv(self):
        code, output = run('--format', 'csv', 'table', '2', '--orders', '13', '--class', 'u')
        lines = output.splitlines()

        self.assertEqual(EXIT_OK, code)
        self.assertEqual('r,13 (formula)', lines[0])
        self.assertEqual(['0,1', '2,1', '4,3', '6,4', '8,3', '10,1', '12,1'], lines[1:])

    def test_table_two_skips_unsupported(self):
        code, output = run('--format', 'csv', 'table', '2', '--max', '8', '--class', 'd')

        self.assertEqual(EXIT_OK, code)
        self.assertEqual('r,2 (formula),3 (formula),5 (formula),6 (formula),'
                         '7 (formula)', output.splitlines()[0])

class TestVerify(CliTestCase):

    def test_holds(self):
        code, output = run('verify', '--identity', '4.6', '--max', '80')

        self.assertEqual(EXIT_OK, code)
        self.assertEqual('holds 5', output.splitlines()[-1])

    def test_json(self):
        code, output = run('--format', 'json', 'verify', '--identity', '3.2', '--identity', '4.6',
                           '--max', '20')
        records = json_lines(output)

        self.assertEqual(EXIT_OK, code)
        self.assertEqual([('3.2', 3), ('3.2', 5), ('3.2', 13), ('4.6', 5), ('4.6', 13)],
                         list((r['key'], r['order']) for r in records))
        self.assertTrue(all(r['status'] == 'holds' for r in records))

    def test_unknown_identity(self):
        self.assertEqual(EXIT_USAGE, run('verify', '--identity', '7.7', '--max', '10')[0])

class TestPrimes(CliTestCase):

    def test_nearly_doubled(self):
        code, output = run('--format', 'json', 'primes', '--nearly-doubled', '--limit', '1000')
        records = json_lines(output)

        self.assertEqual(EXIT_OK, code)
        self.assertEqual(21, len(records))
        self.assertEqual({'q' : '2', 'p' : '3'}, records[0])

    def test_chain(self):
        code, output = run('--format', 'csv', 'primes', '--chain', '--ptilde', '3', '--kmax', '50')

        self.assertEqual(EXIT_OK, code)
        self.assertEqual(['k,smaller,larger', '1,7,13', '5,97,193'], output.splitlines())

    def test_chain_domain(self):
        self.assertEqual(EXIT_USAGE, run('primes', '--chain', '--ptilde', '2', '--kmax', '10')[0])
        self.assertEqual(EXIT_USAGE, run('primes', '--chain')[0])

class TestLogConcave(CliTestCase):

    def test_log_concave(self):
        code, output = run('logconcave', '--order', '61')

        self.assertEqual(EXIT_OK, code)
        self.assertEqual('order 61 (formula): log-concave\n', output)

    def test_violation(self):
        code, output = run('--format', 'json', 'logconcave', '--order', '121')
        record = json_lines(output)[0]

        self.assertEqual(EXIT_VIOLATION, code)
        self.assertFalse(record['log_concave'])
        self.assertTrue(record['violations'])

class TestOracle(CliTestCase):

    def test_dump(self):
        code, output = run('oracle', '--order', '5', '--class', 'u', '--dump')

        self.assertEqual(EXIT_OK, code)
        self.assertEqual(['5;0;{};1', '5;2;{1,4};2', '5;4;{1,2,3,4};1'], output.splitlines())

    def test_dump_json(self):
        code, output = run('--format', 'json', 'oracle', '--order', '5', '--class', 'u', '--dump')
        records = json_lines(output)

        self.assertEqual({'order' : '5', 'valency' : '2', 'connection_set' : '{1,4}',
                          'size' : '2'}, records[1])

    def test_classify(self):
        code, output = run('--format', 'json', 'oracle', '--order', '13', '--classify')

        self.assertEqual(EXIT_OK, code)
        self.assertEqual({'order' : '13', 'undirected' : '2', 'tournament' : '6', 'mixed' : '0',
                          'provenance' : 'oracle'}, json_lines(output)[0])

    def test_beyond_bounds(self):
        self.assertEqual(EXIT_UNSUPPORTED, run('oracle', '--order', '17', '--class', 'd')[0])

class TestParseOrders(unittest.TestCase):

    def test_parse(self):
        self.assertEqual([7, 13, 14], parse_orders('7,13,14'))
        self.assertEqual([5], parse_orders('5,'))
        self.assertRaises(ValidationError, parse_orders, '7,0')
        self.assertRaises(ValidationError, parse_orders, '7,x')

if __name__ == '__main__':
    unittest.main()

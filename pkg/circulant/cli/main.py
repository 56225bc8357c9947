import argparse
import logging
import sys

from circulant.core import __version__
from circulant.core.config import FORMATS, load_config, write_config
from circulant.core.enumerators import CirculantClass, D, O, U
from circulant.core.errors import \
    ConfigError, ConsistencyError, DomainError, ResourceError, UnsupportedOrder
from circulant.core.validation import ValidationError
from circulant.cli import commands
from circulant.cli.commands import \
    EXIT_UNSUPPORTED, EXIT_USAGE, EXIT_VIOLATION, parse_orders
from circulant.cli.output import Output

log = logging.getLogger(__name__)

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

def _orders(text):
    try:
        return parse_orders(text)
    except ValidationError as e:
        raise argparse.ArgumentTypeError(str(e))

def _oracle_flags(parser):
    parser.add_argument('--allow-slow', action='store_true',
                        help='let the oracle run beyond its default bounds')

def build_parser():
    '''Return the argument parser of the circulant command.'''

    parser = argparse.ArgumentParser(prog='circulant',
        description='Count circulant graphs and check identities between the counts.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (-v) or everything (-vv) to stderr')
    parser.add_argument('--config', help='JSON configuration file (default: $CIRCULANT_CONFIG)')
    parser.add_argument('--format', choices=FORMATS,
                        help='output format (default: $CIRCULANT_FORMAT or text)')
    parser.add_argument('--mr-rounds', type=int,
                        help='Miller-Rabin rounds above 2^64')
    parser.add_argument('--write-config', metavar='PATH',
                        help='save the effective configuration as JSON before running')

    subparsers = parser.add_subparsers(dest='name', metavar='command')
    subparsers.required = True

    count = subparsers.add_parser('count', help='count one class at one order')
    count.add_argument('--order', type=int, required=True)
    count.add_argument('--class', dest='klass', type=CirculantClass.parse, required=True)
    count.add_argument('--poly', action='store_true', help='print the series by valency')
    count.add_argument('--valency', type=int, help='print the count at one valency')
    count.add_argument('--oracle', action='store_true', help='count by brute force')
    _oracle_flags(count)
    count.set_defaults(command=commands.count_command)

    table = subparsers.add_parser('table', help='reproduce the count tables')
    table.add_argument('which', type=int, choices=(1, 2))
    orders = table.add_mutually_exclusive_group(required=True)
    orders.add_argument('--max', type=int, help='every order up to this one')
    orders.add_argument('--orders', type=_orders, help='comma separated orders')
    table.add_argument('--class', dest='klass', type=CirculantClass.parse, choices=(D, U, O),
                       default=U, help='the class of table 2 (default u)')
    table.add_argument('--oracle', action='store_true', help='fall back to the oracle')
    table.add_argument('--strict', action='store_true',
                       help='exit %d when an order is not supported' % EXIT_UNSUPPORTED)
    _oracle_flags(table)
    table.set_defaults(command=commands.table_command)

    verify = subparsers.add_parser('verify', help='check identities')
    keys = verify.add_mutually_exclusive_group(required=True)
    keys.add_argument('--identity', action='append', help='an identity key, repeatable')
    keys.add_argument('--all', action='store_true', help='every identity')
    verify.add_argument('--max', type=int, required=True, help='the largest instantiation')
    verify.add_argument('--oracle', action='store_true', help='fall back to the oracle')
    verify.add_argument('--workers', type=int, help='threads evaluating instantiations')
    _oracle_flags(verify)
    verify.set_defaults(command=commands.verify_command)

    primes = subparsers.add_parser('primes', help='search prime pairs and chains')
    mode = primes.add_mutually_exclusive_group(required=True)
    mode.add_argument('--nearly-doubled', action='store_true', help='pairs (q, 2q - 1)')
    mode.add_argument('--chain', action='store_true', help='pairs ptilde 2^k + 1, ptilde 2^(k+1) + 1')
    primes.add_argument('--limit', type=int, default=1000)
    primes.add_argument('--ptilde', type=int)
    primes.add_argument('--kmax', type=int, default=100)
    primes.set_defaults(command=commands.primes_command)

    logconcave = subparsers.add_parser('logconcave', help='probe log-concavity by valency')
    logconcave.add_argument('--order', type=int, required=True)
    logconcave.add_argument('--oracle', action='store_true', help='fall back to the oracle')
    _oracle_flags(logconcave)
    logconcave.set_defaults(command=commands.logconcave_command)

    oracle = subparsers.add_parser('oracle', help='run the brute-force oracle')
    oracle.add_argument('--order', type=int, required=True)
    oracle.add_argument('--class', dest='klass', type=CirculantClass.parse, default=D)
    oracle.add_argument('--poly', action='store_true', help='print the series by valency')
    run = oracle.add_mutually_exclusive_group()
    run.add_argument('--dump', action='store_true', help='one representative per class')
    run.add_argument('--classify', action='store_true',
                     help='split the self-complementary circulants')
    run.add_argument('--cayley', action='store_true', help='count multiplier orbits')
    run.add_argument('--non-ci', action='store_true',
                     help='count classes that hold several multiplier orbits')
    _oracle_flags(oracle)
    oracle.set_defaults(command=commands.oracle_command)

    return parser

def configure_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG

    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT)

def main(argv=None):
    '''Run the command line and return the exit code.

       @param argv : optional, list(str)
           the arguments, sys.argv[1:] by default'''

    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    configure_logging(args.verbose)

    try:
        config = load_config(args.config)
    except ConfigError as e:
        log.critical(str(e))
        return EXIT_USAGE

    if args.format is not None:
        config['format'] = args.format
    if args.mr_rounds is not None:
        config['mr_rounds'] = args.mr_rounds

    if args.write_config is not None:
        try:
            write_config(config, args.write_config)
        except ConfigError as e:
            log.critical(str(e))
            return EXIT_USAGE
        log.info('wrote the configuration to %s', args.write_config)

    try:
        return args.command(args, config, Output(config['format']))
    except (ValidationError, DomainError) as e:
        log.critical(str(e))
        return EXIT_USAGE
    except (UnsupportedOrder, ResourceError) as e:
        log.critical(str(e))
        return EXIT_UNSUPPORTED
    except ConsistencyError as e:
        log.critical('internal inconsistency: %s', e)
        return EXIT_VIOLATION

import logging

from circulant.core import serializers
from circulant.core.enumerators import \
    CLASSES, U, count, log_concavity_probe, supported
from circulant.core.errors import DomainError, ResourceError, UnsupportedOrder
from circulant.core.identities import KEYS, summarize, failed, verify_range
from circulant.core.numtheory import cunningham_pairs, nearly_doubled_primes
from circulant.core.oracle import \
    cayley_classes, classify_self_complementary, enumerate_class, non_ci_count, \
    representatives
from circulant.core.validation import ListField, RangeField
from circulant.cli.output import NOT_AVAILABLE, decimal_columns, text_value
from circulant.utils import pretty

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3

TABLE_ONE_START = 2

def parse_orders(text):
    '''Parse a comma separated list of orders, e.g. 7,13,14.

       @param text : str
           the list as typed on the command line'''

    field = ListField(RangeField(minimum=1))
    field.set_name('orders')
    return field._process(list(s for s in text.split(',') if s.strip()))

def _write_count(out, result, poly=False, valency=None):
    if poly and result.by_valency is None:
        raise DomainError('class %s carries no valency series' % result.klass)

    # the keys of CountResult.to_json, by_valency null for sd, su and t
    record = {
        'order' : result.order,
        'class' : result.klass.value,
        'total' : result.total,
        'provenance' : result.provenance,
        'by_valency' : result.by_valency,
    }
    header = ['order', 'class', 'total', 'provenance', 'by_valency']

    if valency is not None:
        record['valency'] = valency
        record['at_valency'] = result.valency(valency)
        header.extend(('valency', 'at_valency'))

    if out.format != 'text':
        _serializers = decimal_columns('total', 'at_valency')
        _serializers['by_valency'] = serializers.unipoly
        out.records(header, [record], serializers=_serializers)
        return

    out.line(pretty.provenance(result.total, result.provenance))
    if poly:
        out.line(pretty.provenance(pretty.poly(result.by_valency), result.provenance))
    if valency is not None:
        out.line('r=%d: %s' % (valency, pretty.provenance(record['at_valency'], result.provenance)))

def count_command(args, config, out):
    '''Print the number of circulants of one class at one order.'''

    if args.oracle:
        result = enumerate_class(args.order, args.klass, allow_slow=args.allow_slow, config=config)
    else:
        result = count(args.order, args.klass, config=config)

    _write_count(out, result, poly=args.poly, valency=args.valency)
    return EXIT_OK

def _orders(args, start):
    if args.orders is not None:
        return args.orders
    return list(range(start, args.max + 1))

def _try_count(n, klass, args, config):
    try:
        return count(n, klass, oracle=args.oracle, allow_slow=args.allow_slow, config=config)
    except (UnsupportedOrder, ResourceError) as e:
        log.warning('%s', e)
        return None

TABLE_ONE_HEADER = ('n', 'C_d', 'C_u', 'C_o', 'C_sd', 'C_su', 'C_t', 'provenance')

def _table_one(args, config, out):
    records = list()
    missing = False

    for n in _orders(args, TABLE_ONE_START):
        record = dict(n=n)
        sources = set()

        for klass, column in zip(CLASSES, TABLE_ONE_HEADER[1:]):
            result = _try_count(n, klass, args, config)
            if result is None:
                missing = True
                record[column] = None
            else:
                record[column] = result.total
                sources.add(result.provenance)

        record['provenance'] = '+'.join(sorted(sources)) or NOT_AVAILABLE
        records.append(record)

    out.records(TABLE_ONE_HEADER, records, serializers=decimal_columns(*TABLE_ONE_HEADER[1:7]),
                missing=NOT_AVAILABLE, numeric=TABLE_ONE_HEADER[:7])

    return missing

def _table_two(args, config, out):
    if args.orders is None and not args.oracle:
        orders = list(n for n in _orders(args, 1) if supported(n, args.klass))
    else:
        orders = _orders(args, 1)

    results = list()
    missing = False
    for n in orders:
        result = _try_count(n, args.klass, args, config)
        if result is None:
            missing = True
        else:
            results.append(result)

    columns = list(pretty.provenance(r.order, r.provenance) for r in results)
    header = ['r'] + columns
    top = max((r.by_valency.degree for r in results), default=-1)
    # the undirected block lists even valencies only
    step = 2 if args.klass is U else 1

    records = list()
    for valency in range(0, top + 1, step):
        record = dict(r=valency)
        for column, result in zip(columns, results):
            if valency <= result.by_valency.degree:
                record[column] = result.valency(valency)
        records.append(record)

    out.records(header, records, serializers=decimal_columns(*columns), numeric=header)
    return missing

def table_command(args, config, out):
    '''Reproduce the count table (1) or the by-valency table (2).'''

    if args.which == 1:
        missing = _table_one(args, config, out)
    else:
        missing = _table_two(args, config, out)

    if missing and args.strict:
        log.critical('some requested orders are not supported')
        return EXIT_UNSUPPORTED

    return EXIT_OK

VERIFY_HEADER = ('key', 'order', 'status', 'conjectural', 'lhs', 'rhs', 'elapsed')

def verify_command(args, config, out):
    '''Check identities at every applicable instantiation up to --max.'''

    keys = KEYS if args.all else args.identity
    workers = args.workers or config['workers']

    reports = verify_range(keys, args.max, oracle=args.oracle, allow_slow=args.allow_slow,
                           config=config, workers=workers)

    if out.format == 'json':
        out.records(VERIFY_HEADER, list(report.to_json() for report in reports))
    else:
        records = list(dict(
                key=report.key,
                order=report.order,
                status=report.status,
                conjectural=report.conjectural,
                lhs=text_value(report.lhs),
                rhs=text_value(report.rhs) if report.rhs is not None else report.detail,
                elapsed=pretty.elapsed(report.elapsed))
            for report in reports)
        out.records(VERIFY_HEADER, records, numeric=('order',))

    summary = summarize(reports)
    if out.format == 'text':
        out.line()
        out.line(', '.join('%s %d' % (status, summary[status])
                           for status in sorted(summary)))

    if failed(reports):
        log.critical('%d identity instantiations fail', summary['fails'])
        return EXIT_VIOLATION

    return EXIT_OK

def primes_command(args, config, out):
    '''List nearly doubled prime pairs or Cunningham chain indices.'''

    rounds = config['mr_rounds']

    if args.nearly_doubled:
        pairs = nearly_doubled_primes(args.limit, rounds)
        records = list(dict(q=q, p=p) for q, p in pairs)
        out.records(('q', 'p'), records, serializers=decimal_columns('q', 'p'),
                    numeric=('q', 'p'))
        log.info('%d nearly doubled pairs up to %d', len(pairs), args.limit)
        return EXIT_OK

    if args.ptilde is None:
        raise DomainError('--chain needs --ptilde')

    indices = cunningham_pairs(args.ptilde, args.kmax, rounds)
    records = list(dict(
            k=k,
            smaller=(args.ptilde << k) + 1,
            larger=(args.ptilde << (k + 1)) + 1)
        for k in indices)

    out.records(('k', 'smaller', 'larger'), records,
                serializers=decimal_columns('smaller', 'larger'), numeric=('k', 'smaller', 'larger'))
    return EXIT_OK

def logconcave_command(args, config, out):
    '''Probe the undirected valency series for log-concavity.'''

    result = count(args.order, U, oracle=args.oracle, allow_slow=args.allow_slow, config=config)
    violations = log_concavity_probe(counts=result.by_valency)

    if out.format != 'text':
        record = {
            'order' : result.order,
            'provenance' : result.provenance,
            'log_concave' : not violations,
            'violations' : list(v.r for v in violations),
        }
        out.records(('order', 'provenance', 'log_concave', 'violations'), [record])
    elif violations:
        records = list(dict(r=v.r, square=v.square, product=v.product) for v in violations)
        out.records(('r', 'square', 'product'), records, numeric=('r', 'square', 'product'))
        out.line('order %d (%s): not log-concave' % (result.order, result.provenance))
    else:
        out.line('order %d (%s): log-concave' % (result.order, result.provenance))

    return EXIT_VIOLATION if violations else EXIT_OK

DUMP_HEADER = ('order', 'valency', 'connection_set', 'size')

def oracle_command(args, config, out):
    '''Run the brute-force oracle.'''

    n, klass = args.order, args.klass
    options = dict(allow_slow=args.allow_slow, config=config)

    if args.dump:
        lines = representatives(n, klass, **options)
        if out.format == 'text':
            for line in lines:
                out.line(line)
        else:
            out.records(DUMP_HEADER, list(dict(zip(DUMP_HEADER, line.split(';'))) for line in lines))
        return EXIT_OK

    if args.classify:
        split = classify_self_complementary(n, **options)
        header = ('order', 'undirected', 'tournament', 'mixed', 'provenance')
        record = dict(split._asdict(), order=n, provenance='oracle')
    elif args.cayley:
        header = ('order', 'class', 'cayley_classes', 'provenance')
        record = dict(order=n, cayley_classes=cayley_classes(n, klass, **options),
                      provenance='oracle')
    elif args.non_ci:
        split = non_ci_count(n, klass, **options)
        header = ('order', 'class', 'classes', 'circulants', 'provenance')
        record = dict(split._asdict(), order=n, provenance='oracle')
    else:
        _write_count(out, enumerate_class(n, klass, **options), poly=args.poly)
        return EXIT_OK

    if 'class' in header:
        record['class'] = klass.value

    numbers = list(c for c in header if c not in ('class', 'provenance'))
    out.records(header, [record], serializers=decimal_columns(*numbers), numeric=numbers)
    return EXIT_OK

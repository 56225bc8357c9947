import csv
import json
import sys

from circulant.core import serializers as _serializers
from circulant.core.algebra import SymPoly, UniPoly
from circulant.core.config import FORMATS
from circulant.core.serializers import serialize
from circulant.utils import pretty
from circulant.utils.table import Table

NOT_AVAILABLE = 'n/a'

def _optional(serializer):
    # None stays None: null in JSON, an empty cell in CSV
    def wrapper(o):
        if o is None:
            return None
        return serializer(o)

    wrapper.whole = getattr(serializer, 'whole', False)
    return wrapper

def text_value(value, missing=''):
    '''Render one cell for the text format.

       @param value : object
           an int, polynomial, tuple of those, string or None
       @param missing : optional, str
           what None renders as'''

    if value is None:
        return missing
    if isinstance(value, UniPoly):
        return pretty.poly(value)
    if isinstance(value, SymPoly):
        return str(value) or '0'
    if isinstance(value, (tuple, list)):
        return ', '.join(text_value(v, missing) for v in value)
    if isinstance(value, bool):
        return 'yes' if value else ''
    return str(value)

def csv_value(value):
    if value is None:
        return ''
    if isinstance(value, (list, tuple)):
        return ' '.join(csv_value(v) for v in value)
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)

class Output(object):
    '''Writes records in one of the formats text, csv or json.'''

    def __init__(self, format_, stream=None):
        '''Create the writer.

           @param format_ : str
               text, csv or json
           @param stream : optional, file
               where to write, standard output by default'''

        if format_ not in FORMATS:
            raise ValueError('unknown output format %r' % (format_,))

        self.format = format_
        self.stream = stream if stream is not None else sys.stdout

    def line(self, s=''):
        self.stream.write('%s\n' % s)

    def records(self, header, records, serializers=None, missing='', numeric=()):
        '''Write a list of records.

           json emits one sorted-key object per record, numbers run through
           the serializers first (counts travel as decimal strings). csv
           writes the header then one row per record. text renders an
           aligned table.

           @param header : sequence(str)
               the columns, in order
           @param records : list(dict)
               the records, keyed by column
           @param serializers : optional, dict
               column -> serializer from circulant.core.serializers
           @param missing : optional, str
               how the text format renders None
           @param numeric : optional, iterable(str)
               the columns padded on the left in the text format'''

        serializers = dict((k, _optional(f)) for k, f in (serializers or {}).items())

        if self.format == 'json':
            for record in records:
                self.line(json.dumps(serialize(record, **serializers), sort_keys=True))
            return

        if self.format == 'csv':
            writer = csv.writer(self.stream, lineterminator='\n')
            writer.writerow(header)
            for record in records:
                record = serialize(record, **serializers)
                writer.writerow(list(csv_value(record.get(column)) for column in header))
            return

        rows = list(tuple(text_value(record.get(column), missing) for column in header)
                    for record in records)

        table = Table(*rows, header=header)
        for column, name in enumerate(header):
            if name in numeric:
                table.set_column_pad_left(column, True)

        for row in table.iformatted_rows(column_joiner='  '):
            self.line(row)

def decimal_columns(*columns):
    '''Return a serializer mapping that writes the columns as decimal
       strings.'''

    return dict((column, _serializers.decimal) for column in columns)

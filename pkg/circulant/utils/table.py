class Table(object):
    '''Rows of cells printed as aligned text columns. Counts run to dozens of
       digits, so every column is as wide as its widest formatted cell.'''

    def __init__(self, *rows, header=None):
        '''@param rows : positional arguments
               the rows, each a sequence of cells accepted by str.format()
           @param header : optional, sequence(str)
               column titles, printed first and never formatted'''

        if not rows and header is None:
            raise ValueError('at least one row or a header must be supplied')

        self.data = rows
        self.header = tuple(header) if header is not None else None
        self.n_columns = len(self.header) if self.header is not None else len(rows[0])

        for row in rows:
            if len(row) != self.n_columns:
                raise ValueError('row %r does not have %d columns' % (row, self.n_columns))

        self.formats = ['{:}'] * self.n_columns
        self.pads = [False] * self.n_columns

    def _check_column(self, column):
        if not 0 <= column < self.n_columns:
            raise ValueError('column is out of range')

    def set_column_format(self, column, format_):
        '''@param column : int
               the column index
           @param format_ : str
               a str.format() pattern with one field'''

        self._check_column(column)
        self.formats[column] = format_

    def set_column_pad_left(self, column, pad_left):
        '''@param column : int
               the column index
           @param pad_left : bool
               right-align the column (pad on the left)'''

        self._check_column(column)
        self.pads[column] = pad_left

    def iformat_row(self, row):
        for format_, cell in zip(self.formats, row):
            if isinstance(cell, (list, tuple)):
                yield format_.format(*cell)
            else:
                yield format_.format(cell)

    def iformat_rows(self):
        '''Yield each row as an iterator of strings, the header first.'''

        if self.header is not None:
            yield iter(self.header)

        for row in self.data:
            yield self.iformat_row(row)

    def column_widths(self):
        widths = [0] * self.n_columns
        for row in self.iformat_rows():
            widths = list(max(w, len(cell)) for w, cell in zip(widths, row))
        return widths

    def pad(self, s, width, pad_character=' ', pad_left=False):
        '''Pad s to width with pad_character.

           @param s : str
               the cell
           @param width : int
               the column width, at least len(s)
           @param pad_character : optional, str
               one character
           @param pad_left : optional, bool
               pad on the left instead of the right'''

        if len(s) > width:
            raise ValueError('string is longer than allowed width')

        if len(pad_character) != 1:
            raise ValueError('pad_character must be exactly one character')

        if pad_left:
            return s.rjust(width, pad_character)
        return s.ljust(width, pad_character)

    def iformatted_rows(self, column_joiner=' ', pad_character=' '):
        '''Yield the aligned lines.

           @param column_joiner : optional, str
               the separator between columns
           @param pad_character : optional, str
               one character used for padding'''

        widths = self.column_widths()

        for row in self.iformat_rows():
            cells = list(self.pad(cell, width, pad_character, pad_left)
                         for cell, width, pad_left in zip(row, widths, self.pads))
            # no padding after the last column
            yield column_joiner.join(cells).rstrip(pad_character)

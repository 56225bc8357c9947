UNITS = ('hours', 'minutes', 'seconds')

def elapsed(td, n=None):
    '''Render a duration as its non-zero hours, minutes and seconds, or as
       milliseconds below one second, or '-' when it is zero.

       @param td : timedelta
           the duration
       @param n : optional, int
           keep only the n largest non-zero components'''

    total = td.total_seconds()

    hours, rest = divmod(total, 3600)
    minutes, rest = divmod(rest, 60)
    seconds, fraction = divmod(rest, 1)

    parts = list('%d %s' % (int(amount), unit)
                 for amount, unit in zip((hours, minutes, seconds), UNITS) if int(amount))
    if n:
        parts = parts[:n]

    if parts:
        return ', '.join(parts)

    milliseconds = int(round(1000 * fraction))
    if milliseconds:
        return '%d milliseconds' % milliseconds

    return '-'

def _monomial(coefficient, power, variable):
    if power == 0:
        return str(coefficient)

    term = variable if power == 1 else '%s^%d' % (variable, power)
    if coefficient == 1:
        return term
    return '%d%s' % (coefficient, term)

def poly(p, variable='z'):
    '''Render a polynomial with ascending powers, e.g. 1 + z^2 + 3z^4.

       @param p : UniPoly
           the polynomial
       @param variable : optional, str
           the name of the variable'''

    terms = list((c, i) for i, c in enumerate(p) if c)

    if not terms:
        return '0'

    rendered = ''
    for k, (c, i) in enumerate(terms):
        if k:
            rendered += ' - ' if c < 0 else ' + '
        elif c < 0:
            rendered += '-'
        rendered += _monomial(abs(c), i, variable)

    return rendered

def provenance(value, source):
    '''Tag a number with where it came from: 8 (formula).

       @param value : int|str
           the number
       @param source : str
           formula, formal or oracle'''

    return '%s (%s)' % (value, source)

class CirculantError(Exception):
    '''The base class for every error raised by the circulant package.'''

    def __init__(self, *args):
        super(CirculantError, self).__init__(*args)

class DomainError(CirculantError, ValueError):
    '''An argument lies outside the domain of the operation (n = 0, an even
       p-tilde, a composite "prime", ...).'''

class ParityError(CirculantError):
    '''A square-value assignment or a half exponent met an odd exponent.'''

class ConsistencyError(CirculantError):
    '''An exact computation came out inexact, or two formulas for the same
       quantity disagree. Always a transcription bug, never bad input.'''

class UnsupportedOrder(CirculantError):
    '''No formula covers this order for this class of circulants.'''

    def __init__(self, order, klass, reason=None):
        '''Create the UnsupportedOrder exception.

           @param order : int
               the requested order
           @param klass : CirculantClass|str
               the requested class of circulants
           @param reason : optional, str
               why the order is not supported'''

        message = 'no formula for class %s at order %d' % (klass, order)
        if reason:
            message = '%s: %s' % (message, reason)

        super(UnsupportedOrder, self).__init__(message)
        self.order = order
        self.klass = klass

class ResourceError(CirculantError):
    '''The request is beyond desk scale for the brute-force oracle.'''

class ConfigError(CirculantError):
    '''The configuration file is unreadable or does not validate.'''

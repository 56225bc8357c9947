from circulant.core.algebra import SymPoly, UniPoly
from circulant.core.recurse import recurse, recurse_whole

def serialize(o, **kwargs):
    '''(De)serialize the object with the serializers passed in as keyword
       arguments. The object may be an arbitrary nesting of dicts/lists, see
       circulant.core.recurse.recurse() for how keys are formed. Serializers
       for UniPoly and SymPoly values take the whole value at their key.

       @param o : dict|iterable
           the object to serialize
       @param kwargs : keyword arguments
           a mapping of field name -> serializer function'''

    def callback(key, value):
        if key in kwargs:
            return kwargs[key](value)

    whole = set(key for key, function in kwargs.items() if getattr(function, 'whole', False))
    if whole:
        return recurse_whole(o, callback, whole)

    return recurse(o, callback)

def _whole(function):
    function.whole = True
    return function

def decimal(o):
    '''(De)serialize the object to/from int/decimal str. Counts exceed 64
       bits, so they never travel as JSON numbers.

       @param o : int|str
           the object to (de)serialize'''

    if isinstance(o, str):
        return int(o)

    if isinstance(o, int) and not isinstance(o, bool):
        return str(o)

    raise ValueError('%r is not a string or int' % (o,))

@_whole
def unipoly(o):
    '''(De)serialize the object to/from UniPoly/list of decimal str. None
       passes through as None.

       @param o : UniPoly|list(str)|None
           the object to (de)serialize'''

    if o is None:
        return None

    if isinstance(o, UniPoly):
        return o.to_json()

    if isinstance(o, (list, tuple)):
        return UniPoly.from_json(o)

    raise ValueError('%r is not a UniPoly or coefficient list' % (o,))

@_whole
def sympoly(o):
    '''(De)serialize the object to/from SymPoly/list of term records.

       @param o : SymPoly|list(dict)
           the object to (de)serialize'''

    if isinstance(o, SymPoly):
        return o.to_json()

    if isinstance(o, (list, tuple)):
        return SymPoly.from_json(o)

    raise ValueError('%r is not a SymPoly or term record list' % (o,))

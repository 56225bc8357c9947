def recurse(o, callback, key=None):
    '''Walk an arbitrary nesting of dicts and lists, calling the callback at
       every leaf with the dotted path of dict keys that leads to it.

       Lists are transparent: every element of a list is reported under the
       key of the list itself. A serialized CountResult such as

       o = {
           'order' : 13,
           'total' : 352,
           'by_valency' : [1, 1, 6],
           'source' : {'provenance' : 'formula'}
       }

       produces the calls

       'order', 13
       'total', 352
       'by_valency', 1    (three times, once per element)
       'source.provenance', 'formula'

       @param o : dict|list|tuple|object
           the object to walk
       @param callback : function(key, value) -> newvalue
           called at each leaf; a returned value other than None replaces the
           leaf
       @param key : optional, tuple(str)
           the dict keys walked so far'''

    if key is None:
        key = tuple()

    if isinstance(o, (list, tuple)):
        return list(recurse(i, callback, key=key) for i in o)

    if isinstance(o, dict):
        return dict((_key, recurse(value, callback, key + (_key,))) for _key, value in o.items())

    _value = callback('.'.join(key), o)
    if _value is not None:
        return _value
    return o

def recurse_whole(o, callback, whole_keys, key=None):
    '''Like recurse, but the values at the dotted paths in whole_keys are
       handed to the callback in one piece instead of element by element.

       @param o : dict|list|tuple|object
           the object to walk
       @param callback : function(key, value) -> newvalue
           called at each leaf and at each whole key
       @param whole_keys : iterable(str)
           the dotted paths whose values are not descended into
       @param key : optional, tuple(str)
           the dict keys walked so far'''

    if key is None:
        key = tuple()

    dotted = '.'.join(key)
    if key and dotted in whole_keys:
        _value = callback(dotted, o)
        return o if _value is None else _value

    if isinstance(o, (list, tuple)):
        return list(recurse_whole(i, callback, whole_keys, key=key) for i in o)

    if isinstance(o, dict):
        return dict((_key, recurse_whole(value, callback, whole_keys, key + (_key,)))
                    for _key, value in o.items())

    _value = callback(dotted, o)
    if _value is not None:
        return _value
    return o

class ValidationError(Exception):
    '''Raised when a value does not validate against its field.'''

    def __init__(self, *args):
        super(ValidationError, self).__init__(*args)

class Field(object):
    '''A typed slot of a configuration document or command line value.'''

    def __init__(self, type_, required=True, null=False):
        '''Create the field.

           @param type_ : type|tuple(type)
               the accepted Python type(s)
           @param required : optional, bool
               whether an enclosing DictField insists on the key, or a
               ListField on at least one element (default True)
           @param null : optional, bool
               whether None is accepted (default False)'''

        self.type = type_
        self.required = required
        self.null = null

        # filled in by the Validator metaclass or the enclosing field
        self.name = None

    def set_name(self, name):
        '''Name the field, so errors can say where they happened.

           @param name : str
               the dotted path of the field'''

        self.name = name

    def _raise_(self, message):
        if self.name:
            message = '%s: %s' % (self.name, message)
        raise ValidationError(message)

    def _process(self, value):
        '''Check null and type, then hand the value to process().

           @param value : object
               the raw value'''

        if value is None:
            if self.null:
                return None
            self._raise_('value cannot be null')

        # bool is an int subclass, but never a meaningful count
        if isinstance(value, bool) or not isinstance(value, self.type):
            self._raise_('invalid type: %s (should be %s)' % (type(value), self.type))

        return self.process(value)

    def process(self, value):
        return value

class DictField(Field):
    '''A dict whose keys map to their own fields.'''

    def __init__(self, subfields, **kwargs):
        '''@param subfields : dict
               key -> Field
           @param kwargs : keyword arguments
               passed on to Field'''

        super(DictField, self).__init__(dict, **kwargs)
        self.subfields = subfields

    def set_name(self, name):
        super(DictField, self).set_name(name)
        for key, field in self.subfields.items():
            field.set_name('%s.%s' % (name, key))

    def _validate_keys_(self, keys):
        keys = frozenset(keys)

        unknown = keys.difference(self.subfields)
        if unknown:
            self._raise_('the following keys are not recognised: %s' % ', '.join(sorted(unknown)))

        missing = set(key for key, field in self.subfields.items()
                      if field.required and key not in keys)
        if missing:
            self._raise_('the following required keys are missing: %s' % ', '.join(sorted(missing)))

    def process(self, value):
        '''Reject unknown and missing keys, then validate key by key.

           @param value : dict
               the document'''

        self._validate_keys_(value)
        return dict((key, self.subfields[key]._process(v)) for key, v in value.items())

class ListField(Field):
    '''A list (or tuple) of values sharing one field.'''

    def __init__(self, subfield, **kwargs):
        '''@param subfield : Field
               the field every element must pass
           @param kwargs : keyword arguments
               passed on to Field'''

        super(ListField, self).__init__((list, tuple), **kwargs)
        self.subfield = subfield

    def set_name(self, name):
        super(ListField, self).set_name(name)
        self.subfield.set_name('%s.element' % name)

    def process(self, value):
        '''Validate each element. An empty list passes only when the element
           field is not required.

           @param value : list|tuple
               the elements'''

        if not value and self.subfield.required:
            self._raise_('list cannot be empty, because the subfield was defined as required')

        return list(self.subfield._process(element) for element in value)

class IntField(Field):
    '''An int, or a str holding one. Arbitrary precision is kept.'''

    def __init__(self, **kwargs):
        super(IntField, self).__init__((int, str), **kwargs)

    def process(self, value):
        try:
            return int(value)
        except ValueError:
            self._raise_('could not convert %s to int' % value)

class RangeField(IntField):
    '''An IntField with inclusive bounds.'''

    def __init__(self, minimum=None, maximum=None, **kwargs):
        '''@param minimum : optional, int
               the smallest accepted value
           @param maximum : optional, int
               the largest accepted value
           @param kwargs : keyword arguments
               passed on to IntField'''

        super(RangeField, self).__init__(**kwargs)
        self.minimum = minimum
        self.maximum = maximum

    def process(self, value):
        value = super(RangeField, self).process(value)

        if self.minimum is not None and value < self.minimum:
            self._raise_('%d is smaller than %d' % (value, self.minimum))
        if self.maximum is not None and value > self.maximum:
            self._raise_('%d is larger than %d' % (value, self.maximum))

        return value

class StringField(Field):
    '''A str, stripped of surrounding whitespace.'''

    def __init__(self, length=None, **kwargs):
        '''@param length : optional, int
               the longest accepted stripped value
           @param kwargs : keyword arguments
               passed on to Field'''

        super(StringField, self).__init__(str, **kwargs)
        self.length = length

    def process(self, value):
        value = value.strip()
        if self.length is not None and len(value) > self.length:
            self._raise_('string is longer than %d characters: %s' % (self.length, value))
        return value

class ChoiceField(StringField):
    '''A StringField restricted to a fixed set of lower case values, such as
       the output formats.'''

    def __init__(self, choices, **kwargs):
        '''@param choices : iterable(str)
               the accepted values
           @param kwargs : keyword arguments
               passed on to StringField'''

        super(ChoiceField, self).__init__(**kwargs)
        self.choices = tuple(choices)

    def process(self, value):
        value = super(ChoiceField, self).process(value).lower()
        if value not in self.choices:
            self._raise_('%s is not one of %s' % (value, ', '.join(self.choices)))
        return value

from circulant.core.validation.fields import DictField, Field

class ValidatorMeta(type):
    '''Collects the Field attributes of a class body into one DictField and
       replaces them with a static validate(document) method.'''

    def __new__(cls, name, parents, namespace):
        fields = dict((key, value) for key, value in namespace.items() if isinstance(value, Field))
        attrs = dict((key, value) for key, value in namespace.items() if key not in fields)

        for key, field in fields.items():
            field.set_name(key)

        document = DictField(fields, required=True, null=False)
        attrs['validate'] = staticmethod(document._process)

        return super(ValidatorMeta, cls).__new__(cls, name, parents, attrs)

class Validator(object, metaclass=ValidatorMeta):
    '''Subclass and declare fields as class attributes.'''

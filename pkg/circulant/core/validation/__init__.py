from circulant.core.validation.fields import \
    ChoiceField, DictField, ListField, IntField, RangeField, StringField, \
    ValidationError

from circulant.core.validation.validator import Validator

import json
import logging
import os

from circulant.core.errors import ConfigError
from circulant.core.validation import \
    ChoiceField, RangeField, ValidationError, Validator

log = logging.getLogger(__name__)

CONFIG_KEYS = ('format', 'mr_rounds', 'oracle_bound', 'slow_oracle_bound',
               'oracle_candidates', 'workers')

FORMATS = ('text', 'csv', 'json')

DEFAULTS = {
    'format' : 'text',
    'mr_rounds' : 40,
    'oracle_bound' : 16,
    'slow_oracle_bound' : 40,
    'oracle_candidates' : 2 ** 16,
    'workers' : 1,
}

CONFIG_ENV = 'CIRCULANT_CONFIG'
FORMAT_ENV = 'CIRCULANT_FORMAT'

class ConfigValidator(Validator):
    '''The validator for configuration documents. Every key is optional, the
       missing ones are filled from DEFAULTS.'''

    format            = ChoiceField(FORMATS, required=False)
    mr_rounds         = RangeField(minimum=1, required=False)
    oracle_bound      = RangeField(minimum=1, required=False)
    slow_oracle_bound = RangeField(minimum=1, required=False)
    oracle_candidates = RangeField(minimum=1, required=False)
    workers           = RangeField(minimum=1, required=False)

def load_config(path=None):
    '''Load the configuration file and return the settings, merged over the
       defaults. Without a path, the CIRCULANT_CONFIG environment variable is
       consulted; when that is unset too, the defaults are returned. The
       CIRCULANT_FORMAT environment variable overrides the format either way.

       @param path : optional, str
           the path to the configuration file'''

    if path is None:
        path = os.environ.get(CONFIG_ENV)

    config = dict(DEFAULTS)

    if path is not None:
        try:
            config_file = open(path, 'r')
        except IOError:
            raise ConfigError('config file does not exist at %s' % path)

        try:
            _config = json.load(config_file)
        except ValueError:
            raise ConfigError('invalid JSON in config file at %s' % path)
        finally:
            config_file.close()

        try:
            _config = ConfigValidator.validate(_config)
        except ValidationError as e:
            raise ConfigError('config file at %s does not validate: %s' % (path, e))

        log.debug('loaded configuration from %s', path)
        config.update(_config)

    _format = os.environ.get(FORMAT_ENV)
    if _format:
        try:
            config['format'] = ChoiceField(FORMATS).process(_format)
        except ValidationError as e:
            raise ConfigError('%s: %s' % (FORMAT_ENV, e))

    if config['slow_oracle_bound'] < config['oracle_bound']:
        raise ConfigError('slow_oracle_bound (%d) is below oracle_bound (%d)'
            % (config['slow_oracle_bound'], config['oracle_bound']))

    return config

def write_config(config, path):
    '''Write the configuration to the file at path.

       @param config : dict
           the settings to write
       @param path : str
           the location of the to-be-created config file'''

    missing = list()
    _config = dict()

    for key in CONFIG_KEYS:
        if key not in config:
            missing.append(key)
        else:
            _config[key] = config[key]

    if missing:
        raise ConfigError('outgoing configuration is missing the following keys: %s' % ', '.join(missing))

    try:
        _config = ConfigValidator.validate(_config)
    except ValidationError as e:
        raise ConfigError('outgoing configuration does not validate: %s' % e)

    try:
        config_file = open(path, 'w')
    except IOError:
        raise ConfigError('could not open %s for configuration file writing' % path)

    json.dump(_config, config_file, sort_keys=True, indent=4)
    config_file.close()

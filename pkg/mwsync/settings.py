"""
Django settings for the mwsync project.

mwsync is driven entirely through management commands; there is no web
surface, no database and no templates. The settings module is the single
place where numerical defaults (tolerances, step sizes, seeds) live.

For the full list of Django settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import json
import os
import os.path as op
import slugid

from django.core.exceptions import ImproperlyConfigured

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
if 'MWSYNC_BASE_DIR' in os.environ:
    base_dir = os.environ['MWSYNC_BASE_DIR']

    if op.exists(base_dir):
        BASE_DIR = base_dir
    else:
        BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
else:
    BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

local_settings_file_path = os.path.join(
    BASE_DIR, 'config.json'
)

# load config.json
try:
    with open(local_settings_file_path, 'r') as f:
        local_settings = json.load(f)
except IOError:
    local_settings = {}
except ValueError as e:
    error_msg = "Invalid config '{}': {}".format(local_settings_file_path, e)
    raise ImproperlyConfigured(error_msg)


def get_setting(name, default=None, settings=local_settings):
    """Get the local settings variable or return explicit exception"""
    if default is None:
        raise ImproperlyConfigured(
            "Missing default value for '{0}'".format(name)
        )

    # Try looking up setting in `config.json` first
    try:
        return settings[name]
    except KeyError:
        pass

    # If setting is not found try looking for an env var
    try:
        return os.environ[name]

    # If nothing is found return the default setting
    except KeyError:
        return default


def get_float_setting(name, default):
    '''
    Same as get_setting but coerces the value to a float. Environment
    variables always arrive as strings.
    '''
    value = get_setting(name, default)

    try:
        return float(value)
    except (TypeError, ValueError):
        raise ImproperlyConfigured(
            "Setting '{}' must be numeric, got {!r}".format(name, value)
        )


def get_int_setting(name, default):
    value = get_setting(name, default)

    try:
        return int(value)
    except (TypeError, ValueError):
        raise ImproperlyConfigured(
            "Setting '{}' must be an integer, got {!r}".format(name, value)
        )


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = get_setting('SECRET_KEY', slugid.nice())

DEBUG = get_setting('DEBUG', False) in (True, 'True', 'true', '1')

ALLOWED_HOSTS = []

LOG_DIR = os.path.join(BASE_DIR, 'log')
os.makedirs(LOG_DIR, exist_ok=True)

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format':
            "[%(asctime)s] %(levelname)s [%(name)s:%(lineno)s] %(message)s",
            'datefmt': "%d/%b/%Y %H:%M:%S"
        },
        'simple': {
            'format': '%(levelname)s %(message)s'
        },
    },
    'handlers': {
        'console': {
            'level': get_setting('LOG_LEVEL_CONSOLE', 'WARNING'),
            'class': 'logging.StreamHandler',
            'formatter': 'simple'
        },
        'file': {
            'level': get_setting('LOG_LEVEL_FILE', 'WARNING'),
            'class': 'logging.FileHandler',
            'filename': os.path.join(LOG_DIR, 'mwsync.log'),
            'formatter': 'verbose'
        },
    },
    'loggers': {
        'django': {
            'handlers': ['file'],
            'propagate': True,
            'level': get_setting('LOG_LEVEL_DJANGO', 'WARNING'),
        },
        'spacetime': {
            'handlers': ['file'],
            'level': get_setting('LOG_LEVEL_SPACETIME', 'WARNING'),
        },
        'fieldcheck': {
            'handlers': ['file'],
            'level': get_setting('LOG_LEVEL_FIELDCHECK', 'WARNING'),
        },
        'propertime': {
            'handlers': ['file'],
            'level': get_setting('LOG_LEVEL_PROPERTIME', 'WARNING'),
        },
        'scenarios': {
            'handlers': ['file'],
            'level': get_setting('LOG_LEVEL_SCENARIOS', 'WARNING'),
        },
    }
}

if DEBUG:
    # make all loggers use the console.
    for logger in LOGGING['loggers']:
        LOGGING['loggers'][logger]['handlers'] = ['console']

# Application definition

INSTALLED_APPS = [
    'spacetime.apps.SpacetimeConfig',
    'fieldcheck.apps.FieldcheckConfig',
    'propertime.apps.PropertimeConfig',
    'scenarios.apps.ScenariosConfig',
]

# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

# Numerics
# Times are carried as ct (length units) unless a function says otherwise.

# speed of light used when a scenario doesn't give one (natural units)
LIGHTSPEED = get_float_setting('LIGHTSPEED', 1.0)

# relative half-width of the null cone band: |norm_sq| <= NULL_BAND * (1 + t^2 + x^2)
NULL_BAND = get_float_setting('NULL_BAND', 1e-9)

# radar inverse bisection
ROOT_TOL = get_float_setting('ROOT_TOL', 1e-12)
BRACKET_LIMIT = get_float_setting('BRACKET_LIMIT', 1e6)
MAX_BISECTIONS = get_int_setting('MAX_BISECTIONS', 200)

# finite differences, in units of the working window diameter
FD_STEP = get_float_setting('FD_STEP', 1e-5)
CONVERGENCE_ORDER = get_float_setting('CONVERGENCE_ORDER', 2.0)
CONVERGENCE_SLACK = get_float_setting('CONVERGENCE_SLACK', 0.4)
# multiple of machine epsilon in the rounding floor of a stencil
ROUNDING_FACTOR = get_float_setting('ROUNDING_FACTOR', 64.0)

# adaptive Simpson quadrature
QUAD_TOL = get_float_setting('QUAD_TOL', 1e-10)
QUAD_MAX_DEPTH = get_int_setting('QUAD_MAX_DEPTH', 50)
QUAD_MAX_INTERVALS = get_int_setting('QUAD_MAX_INTERVALS', 200000)

# radar trajectories and twins
RADAR_NODES = get_int_setting('RADAR_NODES', 2001)
TWIN_RTOL = get_float_setting('TWIN_RTOL', 1e-6)

# randomized causal checks
DEFAULT_SEED = get_int_setting('DEFAULT_SEED', 0)
WITNESS_MARGIN_FRACTION = get_float_setting('WITNESS_MARGIN_FRACTION', 0.1)
ORIENTATION_SPREAD_TOL = get_float_setting('ORIENTATION_SPREAD_TOL', 1e-8)
# pairs drawn by causal_map and counterexample unless --pairs is given
DEFAULT_PAIRS = get_int_setting('DEFAULT_PAIRS', 100000)

from .settings import *

DEBUG = False

for logger in LOGGING['loggers']:
    LOGGING['loggers'][logger]['level'] = 'ERROR'

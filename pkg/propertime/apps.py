from django.apps import AppConfig


class PropertimeConfig(AppConfig):
    name = 'propertime'

from django.apps import AppConfig


class FieldcheckConfig(AppConfig):
    name = 'fieldcheck'

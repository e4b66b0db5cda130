from django.apps import AppConfig


class GainGraphsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.gain_graphs'
    verbose_name = 'Gain graphs'

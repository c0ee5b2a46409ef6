from django.apps import AppConfig


class GrafosConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'grafos'
    verbose_name = 'Grafos'

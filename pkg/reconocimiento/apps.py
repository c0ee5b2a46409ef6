from django.apps import AppConfig


class ReconocimientoConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'reconocimiento'
    verbose_name = 'Reconocimiento'

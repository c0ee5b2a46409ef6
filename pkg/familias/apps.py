from django.apps import AppConfig


class FamiliasConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'familias'
    verbose_name = 'Familias extremales'

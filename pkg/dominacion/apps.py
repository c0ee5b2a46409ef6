from django.apps import AppConfig


class DominacionConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'dominacion'
    verbose_name = 'Dominación total'

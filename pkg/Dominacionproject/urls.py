from django.contrib import admin
from django.urls import path, include
from django.views.generic import RedirectView

urlpatterns = [
    path('', RedirectView.as_view(pattern_name='admin:index', permanent=False)),
    path('admin/', admin.site.urls),
    path('verificacion/', include('verificacion.urls', namespace='verificacion')),
]

# Personaliza el título del admin
admin.site.site_header = 'Administración Dominación total'
admin.site.site_title = 'Administración Dominación total'
admin.site.index_title = 'Panel de Control'

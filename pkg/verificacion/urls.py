from django.urls import path
from . import views

app_name = 'verificacion'

urlpatterns = [
    path('check/', views.check_json, name='check_json'),
    path('classify/', views.classify_json, name='classify_json'),
    path('censos/', views.censos_json, name='censos_json'),
    path('censos/<int:pk>/excel/', views.exportar_censo_excel, name='censo_excel'),
]

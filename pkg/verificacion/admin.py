from django.contrib import admin
from import_export.admin import ImportExportModelAdmin
from unfold.admin import ModelAdmin, TabularInline
from unfold.contrib.import_export.forms import ImportForm, SelectableFieldsExportForm

from .models import CensoTeorema, GrafoExtremal, ViolacionTeorema
from .resources import CensoTeoremaResource, GrafoExtremalResource, ViolacionTeoremaResource


class GrafoExtremalInline(TabularInline):
    model = GrafoExtremal
    extra = 0
    fields = ('graph6', 'orden', 'tamano', 'gamma_t', 'familia', 'k')
    readonly_fields = fields
    verbose_name = "Grafo extremal"
    verbose_name_plural = "Grafos extremales"


class ViolacionTeoremaInline(TabularInline):
    model = ViolacionTeorema
    extra = 0
    fields = ('linea', 'graph6', 'motivo')
    readonly_fields = fields
    classes = ("collapse",)


@admin.register(CensoTeorema)
class CensoTeoremaAdmin(ModelAdmin, ImportExportModelAdmin):
    import_form_class = ImportForm
    export_form_class = SelectableFieldsExportForm
    resource_class = CensoTeoremaResource
    list_display = ('id', 'fuente', 'orden_maximo', 'verificados', 'omitidos', 'errores_parseo', 'ok', 'segundos', 'fecha')
    list_filter = ('ok',)
    search_fields = ('fuente',)
    search_help_text = "Buscar por: fuente."
    readonly_fields = ('fecha',)
    inlines = [GrafoExtremalInline, ViolacionTeoremaInline]
    list_per_page = 20


@admin.register(GrafoExtremal)
class GrafoExtremalAdmin(ModelAdmin, ImportExportModelAdmin):
    import_form_class = ImportForm
    export_form_class = SelectableFieldsExportForm
    resource_class = GrafoExtremalResource
    list_display = ('graph6', 'orden', 'tamano', 'gamma_t', 'familia', 'k', 'censo')
    list_filter = ('familia', 'orden')
    search_fields = ('graph6',)
    search_help_text = "Buscar por: graph6."
    list_per_page = 50


@admin.register(ViolacionTeorema)
class ViolacionTeoremaAdmin(ModelAdmin, ImportExportModelAdmin):
    import_form_class = ImportForm
    export_form_class = SelectableFieldsExportForm
    resource_class = ViolacionTeoremaResource
    list_display = ('graph6', 'linea', 'motivo', 'censo')
    search_fields = ('graph6', 'motivo')
    search_help_text = "Buscar por: graph6, motivo."

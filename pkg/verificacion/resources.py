from import_export import resources
from .models import CensoTeorema, GrafoExtremal, ViolacionTeorema


class CensoTeoremaResource(resources.ModelResource):
    class Meta:
        model = CensoTeorema
        fields = ('id', 'fuente', 'orden_maximo', 'por_orden', 'verificados', 'omitidos',
                  'errores_parseo', 'segundos', 'workers', 'ok', 'fecha')


class GrafoExtremalResource(resources.ModelResource):
    class Meta:
        model = GrafoExtremal
        fields = ('id', 'censo', 'graph6', 'orden', 'tamano', 'gamma_t', 'familia', 'k')


class ViolacionTeoremaResource(resources.ModelResource):
    class Meta:
        model = ViolacionTeorema
        fields = ('id', 'censo', 'linea', 'graph6', 'motivo')

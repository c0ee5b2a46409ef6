from django.core.exceptions import ValidationError
from django.core.validators import MinValueValidator
from django.db import models, transaction

from reconocimiento.clasificacion import Veredicto


class CensoTeorema(models.Model):
    fuente = models.CharField(max_length=255, verbose_name="Fuente")
    orden_maximo = models.IntegerField(null=True, blank=True, verbose_name="Orden máximo")
    por_orden = models.JSONField(default=dict, blank=True, verbose_name="Grafos por orden")
    verificados = models.IntegerField(default=0, validators=[MinValueValidator(0)], verbose_name="Verificados")
    omitidos = models.IntegerField(default=0, validators=[MinValueValidator(0)], verbose_name="Omitidos")
    errores_parseo = models.IntegerField(default=0, validators=[MinValueValidator(0)], verbose_name="Errores de parseo")
    segundos = models.FloatField(default=0, verbose_name="Tiempo (s)")
    workers = models.IntegerField(default=1, validators=[MinValueValidator(1)], verbose_name="Workers")
    ok = models.BooleanField(default=True, verbose_name="Sin violaciones")
    fecha = models.DateTimeField(auto_now_add=True, verbose_name="Fecha")

    class Meta:
        verbose_name = "Censo"
        verbose_name_plural = "Censos"
        ordering = ['-fecha']

    def __str__(self):
        return f"Censo {self.pk} - {self.fuente}"

    @property
    def lineas(self):
        return self.verificados + self.omitidos + self.errores_parseo

    @classmethod
    def desde_resumen(cls, resumen, orden_maximo=None, workers=1):
        """Guarda un EnumerationSummary con sus extremales y violaciones."""
        with transaction.atomic():
            censo = cls.objects.create(
                fuente=resumen.fuente[:255],
                orden_maximo=orden_maximo,
                por_orden={str(n): c for n, c in resumen.por_orden.items()},
                verificados=resumen.verificados,
                omitidos=resumen.omitidos,
                errores_parseo=len(resumen.errores),
                segundos=resumen.segundos,
                workers=workers,
                ok=resumen.ok,
            )
            GrafoExtremal.objects.bulk_create([
                GrafoExtremal(censo=censo, graph6=g.graph6, orden=g.n, tamano=g.m,
                              gamma_t=g.gamma_t, familia=g.familia, k=g.k)
                for g in resumen.extremales
            ])
            ViolacionTeorema.objects.bulk_create([
                ViolacionTeorema(censo=censo, linea=v.linea, graph6=v.graph6, motivo=v.motivo)
                for v in resumen.violaciones
            ])
        return censo


class GrafoExtremal(models.Model):
    censo = models.ForeignKey(CensoTeorema, on_delete=models.CASCADE, related_name='extremales', verbose_name="Censo")
    graph6 = models.CharField(max_length=255, verbose_name="graph6 canónico")
    orden = models.IntegerField(validators=[MinValueValidator(3)], verbose_name="n")
    tamano = models.IntegerField(validators=[MinValueValidator(0)], verbose_name="m")
    gamma_t = models.IntegerField(validators=[MinValueValidator(1)], verbose_name="γ_t")
    familia = models.CharField(max_length=20, choices=[(v.value, v.value) for v in Veredicto], verbose_name="Familia")
    k = models.IntegerField(null=True, blank=True, verbose_name="k")

    class Meta:
        verbose_name = "Grafo extremal"
        verbose_name_plural = "Grafos extremales"
        ordering = ['censo', 'orden', 'graph6']

    def __str__(self):
        return f"{self.graph6} ({self.familia})"

    @property
    def cota(self):
        """3(n - γ_t): los extremales tienen Δ efectivo 3."""
        return 3 * (self.orden - self.gamma_t)

    def clean(self):
        if self.familia == Veredicto.NINGUNA:
            raise ValidationError({'familia': "Un grafo extremal debe pertenecer a alguna familia."})
        if self.gamma_t is not None and self.orden is not None and self.gamma_t > self.orden:
            raise ValidationError({'gamma_t': "γ_t no puede exceder el orden."})


class ViolacionTeorema(models.Model):
    censo = models.ForeignKey(CensoTeorema, on_delete=models.CASCADE, related_name='violaciones', verbose_name="Censo")
    linea = models.IntegerField(null=True, blank=True, verbose_name="Línea")
    graph6 = models.CharField(max_length=255, verbose_name="graph6")
    motivo = models.TextField(verbose_name="Motivo")

    class Meta:
        verbose_name = "Violación"
        verbose_name_plural = "Violaciones"

    def __str__(self):
        return f"{self.graph6}: {self.motivo[:60]}"

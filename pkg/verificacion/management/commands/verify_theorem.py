import json
import sys

from django.conf import settings
from django.core.management.base import BaseCommand

from grafos.graph6 import read_graph6_lines
from verificacion.censo import verify_enumerated, verify_theorem
from verificacion.comandos import error_uso, error_violacion
from verificacion.enumeracion import ENUM_MAX_N, EnumeracionRechazada
from verificacion.models import CensoTeorema
from verificacion.reportes import censo_csv


class Command(BaseCommand):
    help = 'Censo de la cota m <= Δ(n - γ_t) y de su caracterización de igualdad'
    stealth_options = ("stdin",)

    def add_arguments(self, parser):
        fuente = parser.add_mutually_exclusive_group(required=True)
        fuente.add_argument('--max-n', type=int, help="Todos los grafos conexos de orden 3..N")
        fuente.add_argument('--input', help="Archivo graph6, una línea por grafo ('-' para stdin)")
        parser.add_argument('--jobs', type=int, help="Número de workers")
        salida = parser.add_mutually_exclusive_group()
        salida.add_argument('--json', action='store_true', help="Resumen completo en JSON")
        salida.add_argument('--csv', action='store_true', help="Censo de extremales en CSV")
        parser.add_argument('--save', action='store_true', help="Guardar el censo en la base de datos")

    def _resumen(self, options, jobs):
        if options['max_n'] is not None:
            max_n = getattr(settings, 'VERIFICACION_ENUM_MAX_N', ENUM_MAX_N)
            try:
                return verify_enumerated(options['max_n'], jobs=jobs, enum_max_n=max_n)
            except EnumeracionRechazada as e:
                raise error_uso(str(e)) from e
        ruta = options['input']
        if ruta == '-':
            stdin = options.get('stdin') or sys.stdin
            return verify_theorem(read_graph6_lines(stdin), jobs=jobs, nombre='stdin')
        try:
            with open(ruta, 'rb') as archivo:
                return verify_theorem(read_graph6_lines(archivo), jobs=jobs, nombre=ruta)
        except OSError as e:
            raise error_uso(f"No se pudo leer {ruta}: {e}") from e

    def handle(self, *args, **options):
        jobs = options['jobs'] if options['jobs'] is not None else getattr(settings, 'VERIFICACION_JOBS', 1)
        if jobs < 1:
            raise error_uso(f"--jobs debe ser >= 1 (jobs={jobs})")
        resumen = self._resumen(options, jobs)

        if options['save']:
            censo = CensoTeorema.desde_resumen(resumen, orden_maximo=options['max_n'], workers=jobs)
            self.stderr.write(f"Censo guardado con id {censo.pk}")

        if options['json']:
            self.stdout.write(json.dumps(resumen.to_dict(), ensure_ascii=False))
        elif options['csv']:
            self.stdout.write(censo_csv(resumen), ending="")
        else:
            self._texto(resumen)

        if resumen.errores:
            primero = resumen.errores[0]
            self.stderr.write(f"{len(resumen.errores)} líneas con error; la primera: línea {primero.linea}, "
                              f"byte {primero.offset}: {primero.mensaje}")
        if not resumen.ok:
            raise error_violacion(
                "Violaciones: " + "; ".join(f"{v.graph6} ({v.motivo})" for v in resumen.violaciones)
            )
        if resumen.errores:
            raise error_uso("La entrada contiene líneas graph6 inválidas")

    def _texto(self, resumen):
        self.stdout.write(f"Fuente: {resumen.fuente}")
        for n, cuenta in resumen.por_orden.items():
            self.stdout.write(f"  n={n}: {cuenta} grafos")
        self.stdout.write(f"Líneas: {resumen.lineas} (verificados {resumen.verificados}, "
                          f"omitidos {resumen.omitidos}, errores {len(resumen.errores)})")
        self.stdout.write(f"Extremales: {len(resumen.extremales)}")
        for g in resumen.extremales:
            k = "" if g.k is None else f"({g.k})"
            self.stdout.write(f"  {g.graph6} n={g.n} m={g.m} gamma_t={g.gamma_t} {g.familia}{k}")
        self.stdout.write(f"Violaciones: {len(resumen.violaciones)}")
        self.stdout.write(f"Tiempo: {resumen.segundos:.1f}s")

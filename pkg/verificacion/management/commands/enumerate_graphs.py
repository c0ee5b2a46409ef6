from django.conf import settings
from django.core.management.base import BaseCommand

from grafos.graph6 import graph6_encode
from verificacion.comandos import error_uso
from verificacion.enumeracion import ENUM_MAX_N, EnumeracionRechazada, enumerate_connected


class Command(BaseCommand):
    help = 'Lista en graph6 un representante de cada grafo conexo de orden n (n <= 8)'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--count', action='store_true', help="Mostrar solo el número de clases")

    def handle(self, *args, **options):
        max_n = getattr(settings, 'VERIFICACION_ENUM_MAX_N', ENUM_MAX_N)
        try:
            grafos = list(enumerate_connected(options['n'], max_n=max_n))
        except EnumeracionRechazada as e:
            raise error_uso(str(e)) from e
        if options['count']:
            self.stdout.write(str(len(grafos)))
            return
        for G in grafos:
            self.stdout.write(graph6_encode(G).decode('ascii'))

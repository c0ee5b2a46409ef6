import json

from django.conf import settings

from dominacion.solver import (
    ORACULO_MAX_N, OrdenExcedido, SinConjuntoDominante, gamma_t, gamma_t_oracle,
)
from verificacion.comandos import ComandoGrafo, error_uso, formato_conjunto


class Command(ComandoGrafo):
    help = 'Número de dominación total exacto y un TD-set mínimo de cada grafo graph6 de la entrada'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--oracle', action='store_true', help="Usar la búsqueda exhaustiva por subconjuntos")
        parser.add_argument('--json', action='store_true', help="Salida JSON, un objeto por línea")

    def handle(self, *args, **options):
        max_n = getattr(settings, 'DOMINACION_ORACULO_MAX_N', ORACULO_MAX_N)
        for G in self.grafos_entrada(options):
            try:
                cert = gamma_t_oracle(G, max_n=max_n) if options['oracle'] else gamma_t(G)
            except (SinConjuntoDominante, OrdenExcedido) as e:
                raise error_uso(str(e)) from e
            if options['json']:
                self.stdout.write(json.dumps({"gamma_t": cert.value, "witness": list(cert.witness.members)}))
            else:
                self.stdout.write(f"{cert.value} {formato_conjunto(cert.witness)}")

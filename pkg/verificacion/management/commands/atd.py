import json

from dominacion.solver import SinConjuntoATD, gamma_t_almost
from verificacion.comandos import ComandoGrafo, error_uso, formato_conjunto


class Command(ComandoGrafo):
    help = 'γ_t^a(G;v): menor ATD-set respecto del vértice indicado'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--vertex', type=int, required=True, help="Vértice v (etiqueta desde 0)")
        parser.add_argument('--json', action='store_true')

    def handle(self, *args, **options):
        v = options['vertex']
        for G in self.grafos_entrada(options):
            try:
                cert = gamma_t_almost(G, v)
            except (SinConjuntoATD, ValueError) as e:
                raise error_uso(str(e)) from e
            if options['json']:
                self.stdout.write(json.dumps({"vertex": v, "gamma_t_a": cert.value, "witness": list(cert.witness.members)}))
            else:
                self.stdout.write(f"{cert.value} {formato_conjunto(cert.witness)}")

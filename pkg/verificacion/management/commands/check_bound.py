from reconocimiento.clasificacion import CotaNoAplicable, InconsistenciaInterna, check_bound
from verificacion.comandos import ComandoGrafo, error_uso, error_violacion
from verificacion.reportes import informe_json, informes_csv


class Command(ComandoGrafo):
    help = 'Informe de extremalidad (m <= Δ(n - γ_t)) en JSON para cada grafo de la entrada'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--csv', action='store_true', help="Todos los informes como CSV")

    def handle(self, *args, **options):
        informes = []
        for G in self.grafos_entrada(options):
            try:
                informe = check_bound(G)
            except CotaNoAplicable as e:
                raise error_uso(str(e)) from e
            except InconsistenciaInterna as e:
                raise error_violacion(str(e)) from e
            informes.append(informe)
            if not options['csv']:
                self.stdout.write(informe_json(informe))
        if options['csv']:
            self.stdout.write(informes_csv(informes), ending="")
        if any(not informe.coherente for informe in informes):
            raise error_violacion("Extremalidad y clasificación discrepan")

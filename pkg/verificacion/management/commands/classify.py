import json

from reconocimiento.clasificacion import InconsistenciaInterna, classify
from verificacion.comandos import ComandoGrafo, error_violacion


class Command(ComandoGrafo):
    help = 'Clasifica cada grafo en las familias extremales (Gdone, Gdtwo, Gcub) o NotInFamilies'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--json', action='store_true')

    def handle(self, *args, **options):
        for G in self.grafos_entrada(options):
            try:
                clasificacion = classify(G)
            except InconsistenciaInterna as e:
                raise error_violacion(str(e)) from e
            if options['json']:
                datos = clasificacion.to_dict()
                if clasificacion.nota:
                    datos["note"] = clasificacion.nota
                self.stdout.write(json.dumps(datos, ensure_ascii=False))
            else:
                self.stdout.write(str(clasificacion))

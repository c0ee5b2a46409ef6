import json

import tablib
from django.core.management.base import BaseCommand

from verificacion.comandos import error_uso, error_violacion
from verificacion.extremalidad import MAX_K, verify_families


class Command(BaseCommand):
    help = 'Comprueba m = 3(n - γ_t) y la fórmula cerrada de γ_t en cada familia extremal'

    def add_arguments(self, parser):
        parser.add_argument('--max-k', type=int, default=MAX_K)
        salida = parser.add_mutually_exclusive_group()
        salida.add_argument('--json', action='store_true')
        salida.add_argument('--csv', action='store_true')

    def handle(self, *args, **options):
        if options['max_k'] < 2:
            raise error_uso(f"--max-k debe ser >= 2 (max_k={options['max_k']})")
        filas = verify_families(options['max_k'])
        if options['json']:
            self.stdout.write(json.dumps([f.to_dict() for f in filas]))
        elif options['csv']:
            dataset = tablib.Dataset(headers=["member", "n", "m", "gamma_t", "expected_gamma_t", "extremal", "ok"])
            for f in filas:
                dataset.append(list(f.to_dict().values()))
            self.stdout.write(dataset.export('csv'), ending="")
        else:
            for f in filas:
                estado = "OK" if f.ok else "FALLO"
                self.stdout.write(f"{f.nombre:<8} n={f.n:<3} m={f.m:<3} gamma_t={f.gamma_t:<3} "
                                  f"esperado={f.gamma_esperado:<3} {estado}")
        fallos = [f.nombre for f in filas if not f.ok]
        if fallos:
            raise error_violacion(f"Miembros que no cumplen: {', '.join(fallos)}")

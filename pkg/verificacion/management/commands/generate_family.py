from django.core.management.base import BaseCommand

from familias.generadores import Familia, ParametroInvalido, generate
from grafos.graph6 import graph6_encode
from verificacion.comandos import error_uso

FAMILIAS = {
    'G': Familia.G,
    'H': Familia.H,
    'GP16': Familia.GP16,
    'F': Familia.F,
    'L': Familia.L,
    'corona-cycle': Familia.CORONA,
}


class Command(BaseCommand):
    help = 'Genera un miembro de una familia extremal en graph6 o como lista de aristas'

    def add_arguments(self, parser):
        parser.add_argument('--family', required=True, choices=list(FAMILIAS))
        parser.add_argument('--k', type=int, help="Parámetro de la familia (no aplica a GP16)")
        parser.add_argument('--format', choices=['graph6', 'edgelist'], default='graph6')
        parser.add_argument('--roles', action='store_true', help="Añadir el rol de cada vértice")

    def handle(self, *args, **options):
        try:
            miembro = generate(FAMILIAS[options['family']], options['k'])
        except ParametroInvalido as e:
            raise error_uso(str(e)) from e
        G = miembro.graph
        if options['format'] == 'graph6':
            self.stdout.write(graph6_encode(G).decode('ascii'))
        else:
            self.stdout.write(f"{G.n} {G.m}")
            for u, v in G.edges():
                self.stdout.write(f"{u} {v}")
        if options['roles']:
            for v, rol in miembro.roles.items():
                self.stdout.write(f"# {v} {rol}")

"""
Base común de los comandos de manage.py que leen grafos graph6.

Códigos de salida: 0 éxito, 1 violación de la cota o de la caracterización,
2 error de uso o de parseo.
"""
from __future__ import annotations

import sys
from typing import Iterator

from django.core.management.base import BaseCommand, CommandError

from grafos.graph6 import Graph6Error, graph6_decode, read_graph6_lines
from grafos.grafo import Graph, VertexSet

SALIDA_VIOLACION = 1
SALIDA_USO = 2


def error_uso(mensaje: str) -> CommandError:
    return CommandError(mensaje, returncode=SALIDA_USO)


def error_violacion(mensaje: str) -> CommandError:
    return CommandError(mensaje, returncode=SALIDA_VIOLACION)


def formato_conjunto(S: VertexSet) -> str:
    return "[" + ", ".join(str(v) for v in S.members) + "]"


class ComandoGrafo(BaseCommand):
    """Lee uno o varios grafos graph6 de --g6 o de stdin, una línea por grafo."""

    stealth_options = ("stdin",)

    def add_arguments(self, parser):
        parser.add_argument('--g6', help="Grafo en formato graph6 (por defecto se lee stdin)")

    def grafos_entrada(self, options) -> Iterator[Graph]:
        if options.get('g6'):
            try:
                yield graph6_decode(options['g6'])
            except Graph6Error as e:
                raise error_uso(str(e)) from e
            return
        stdin = options.get('stdin') or sys.stdin
        leidos = 0
        for linea in read_graph6_lines(stdin):
            if linea.omitida:
                continue
            if linea.error is not None:
                raise error_uso(str(linea.error))
            leidos += 1
            yield linea.grafo
        if not leidos:
            raise error_uso("No se recibió ningún grafo graph6")

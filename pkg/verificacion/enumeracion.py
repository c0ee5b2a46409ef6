"""
Enumeración exhaustiva de grafos conexos no isomorfos de orden pequeño.

Todo grafo conexo de orden n tiene un vértice que no es de corte; al
quitarlo queda un grafo conexo de orden n-1. Por eso basta aumentar cada
representante de orden n-1 con un vértice nuevo unido a cada subconjunto
no vacío de vértices y descartar duplicados por forma canónica.
"""
from __future__ import annotations

import logging
import time
from functools import cache
from typing import Iterator

from grafos.canonico import canonical_labeling
from grafos.grafo import Graph, iter_bits, relabel

logger = logging.getLogger(__name__)

ENUM_MAX_N = 8


class EnumeracionRechazada(ValueError):
    """Orden fuera del rango de la enumeración interna."""


def _en_etiquetado_canonico(G: Graph, lab: list[int]) -> Graph:
    perm = [0] * G.n
    for i, v in enumerate(lab):
        perm[v] = i
    return relabel(G, perm)


@cache
def _clases(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    inicio = time.perf_counter()
    nuevo = n - 1
    vistos = {}
    for H in _clases(n - 1):
        for mascara in range(1, 1 << nuevo):
            filas = list(H.adj) + [mascara]
            for u in iter_bits(mascara):
                filas[u] |= 1 << nuevo
            G = Graph(n, tuple(filas))
            forma, lab = canonical_labeling(G)
            if forma not in vistos:
                vistos[forma] = _en_etiquetado_canonico(G, lab)
    logger.info(f"[ENUM] n={n}: {len(vistos)} clases en {time.perf_counter() - inicio:.1f}s")
    return tuple(vistos[forma] for forma in sorted(vistos))


def enumerate_connected(n: int, max_n: int = ENUM_MAX_N) -> Iterator[Graph]:
    """
    Un representante por clase de isomorfismo de grafos conexos de orden n,
    en etiquetado canónico y ordenados por forma canónica.
    """
    max_n = min(max_n, ENUM_MAX_N)
    if not 1 <= n <= max_n:
        raise EnumeracionRechazada(
            f"La enumeración interna cubre 1 <= n <= {max_n} (n={n}); para órdenes mayores use un archivo graph6"
        )
    return iter(_clases(n))

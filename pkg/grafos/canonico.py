"""
Forma canónica por refinamiento de colores e individualización.

Se refina una partición ordenada hasta que sea equitativa, se individualiza
cada vértice de la primera celda no trivial y se recorre el árbol de
búsqueda; la hoja con el mayor certificado (filas de adyacencia
reetiquetadas) define la forma canónica. Las hojas empatadas dan
automorfismos, que podan hermanos en la misma órbita.
Pensado para órdenes <= 64.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from .grafo import Graph, bits_de, iter_bits, relabel

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    key: bytes

    def __str__(self):
        return self.key.hex()


def _refinar(G: Graph, celdas: list[list[int]]) -> list[list[int]]:
    while True:
        mascaras = [bits_de(c) for c in celdas]
        nuevas = []
        for celda in celdas:
            if len(celda) == 1:
                nuevas.append(celda)
                continue
            por_firma: dict[tuple[int, ...], list[int]] = {}
            for v in celda:
                firma = tuple((G.adj[v] & mk).bit_count() for mk in mascaras)
                por_firma.setdefault(firma, []).append(v)
            for firma in sorted(por_firma):
                nuevas.append(por_firma[firma])
        if len(nuevas) == len(celdas):
            return nuevas
        celdas = nuevas


def _individualizar(celdas: list[list[int]], indice: int, v: int) -> list[list[int]]:
    resto = [u for u in celdas[indice] if u != v]
    return celdas[:indice] + [[v], resto] + celdas[indice + 1:]


class _BusquedaCanonica:

    def __init__(self, G: Graph):
        self.G = G
        self.mejor_cert: tuple[int, ...] | None = None
        self.mejor_lab: list[int] | None = None
        self.automorfismos: list[list[int]] = []
        self.hojas = 0

    def _certificado(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.G.n
        for i, v in enumerate(lab):
            pos[v] = i
        return tuple(bits_de(pos[u] for u in iter_bits(self.G.adj[v])) for v in lab)

    def _hoja(self, celdas: list[list[int]]):
        self.hojas += 1
        lab = [c[0] for c in celdas]
        cert = self._certificado(lab)
        if self.mejor_cert is None or cert > self.mejor_cert:
            self.mejor_cert, self.mejor_lab = cert, lab
        elif cert == self.mejor_cert:
            gamma = [0] * self.G.n
            for a, b in zip(self.mejor_lab, lab):
                gamma[a] = b
            if any(gamma[v] != v for v in range(self.G.n)):
                self.automorfismos.append(gamma)

    def _misma_orbita(self, fijos: list[int], u: int, vistos: list[int]) -> bool:
        """¿u está en la órbita de algún vértice visto bajo los automorfismos que fijan el prefijo?"""
        padre = list(range(self.G.n))

        def raiz(x):
            while padre[x] != x:
                padre[x] = padre[padre[x]]
                x = padre[x]
            return x

        for gamma in self.automorfismos:
            if any(gamma[f] != f for f in fijos):
                continue
            for v in range(self.G.n):
                a, b = raiz(v), raiz(gamma[v])
                if a != b:
                    padre[a] = b
        ru = raiz(u)
        return any(raiz(v) == ru for v in vistos)

    def explorar(self, celdas: list[list[int]], prefijo: list[int]):
        celdas = _refinar(self.G, celdas)
        objetivo = next((i for i, c in enumerate(celdas) if len(c) > 1), None)
        if objetivo is None:
            self._hoja(celdas)
            return
        vistos: list[int] = []
        for v in sorted(celdas[objetivo]):
            if vistos and self.automorfismos and self._misma_orbita(prefijo, v, vistos):
                continue
            self.explorar(_individualizar(celdas, objetivo, v), prefijo + [v])
            vistos.append(v)


def canonical_labeling(G: Graph) -> tuple[CanonicalForm, list[int]]:
    """Devuelve la forma canónica y el etiquetado (posición canónica -> vértice)."""
    if G.n == 0:
        return CanonicalForm(bytes([0])), []
    busqueda = _BusquedaCanonica(G)
    busqueda.explorar([list(range(G.n))], [])
    clave = bytes([G.n]) + b"".join(fila.to_bytes(16, "big") for fila in busqueda.mejor_cert)
    logger.debug(f"[CANONICO] n={G.n} hojas={busqueda.hojas} automorfismos={len(busqueda.automorfismos)}")
    return CanonicalForm(clave), busqueda.mejor_lab


def canonical_form(G: Graph) -> CanonicalForm:
    return canonical_labeling(G)[0]


def canonical_relabel(G: Graph) -> Graph:
    """Copia de G con el etiquetado canónico; dos grafos isomorfos dan el mismo resultado."""
    _, lab = canonical_labeling(G)
    perm = [0] * G.n
    for i, v in enumerate(lab):
        perm[v] = i
    return relabel(G, perm)


def _invariantes(G: Graph):
    return G.n, G.m, sorted(G.degrees)


def are_isomorphic(G1: Graph, G2: Graph) -> bool:
    if _invariantes(G1) != _invariantes(G2):
        return False
    return canonical_form(G1) == canonical_form(G2)


def find_isomorphism(G1: Graph, G2: Graph) -> dict[int, int] | None:
    """Mapa vértice de G1 -> vértice de G2, o None si no son isomorfos."""
    if _invariantes(G1) != _invariantes(G2):
        return None
    forma1, lab1 = canonical_labeling(G1)
    forma2, lab2 = canonical_labeling(G2)
    if forma1 != forma2:
        return None
    return dict(zip(lab1, lab2))


def es_isomorfismo(G1: Graph, G2: Graph, mapa: dict[int, int]) -> bool:
    if G1.n != G2.n or G1.m != G2.m or sorted(mapa) != list(range(G1.n)):
        return False
    if sorted(mapa.values()) != list(range(G2.n)):
        return False
    return all(G2.has_edge(mapa[u], mapa[v]) for u, v in G1.edges())

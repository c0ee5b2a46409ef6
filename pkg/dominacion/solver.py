"""
Número de dominación total exacto.

gamma_t resuelve por componentes con ramificación y poda sobre bitsets;
gamma_t_oracle enumera subconjuntos por cardinalidad y sirve de referencia.
Los testigos devueltos son el conjunto mínimo lexicográficamente menor.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from grafos.grafo import Graph, VertexSet, components, induce, iter_bits

logger = logging.getLogger(__name__)

ORACULO_MAX_N = 24


class SinConjuntoDominante(ValueError):
    """El grafo tiene un vértice aislado: no existe ningún TD-set."""


class SinConjuntoATD(ValueError):
    """No existe ATD-set respecto del vértice pedido."""


class OrdenExcedido(ValueError):
    pass


@dataclass(frozen=True)
class TDCertificate:
    value: int
    witness: VertexSet


@dataclass(frozen=True)
class ATDCertificate:
    vertex: int
    value: int
    witness: VertexSet


def is_total_dominating(G: Graph, S: VertexSet) -> bool:
    """N(S) = V(G)."""
    cubiertos = 0
    for v in S:
        cubiertos |= G.adj[v]
    return cubiertos == G.todos


def is_almost_total_dominating(G: Graph, S: VertexSet, v: int) -> bool:
    """v ∈ S, v aislado en G[S] y todo vértice distinto de v con un vecino en S."""
    if v not in S or G.adj[v] & S.bits:
        return False
    cubiertos = 0
    for u in S:
        cubiertos |= G.adj[u]
    return (G.todos & ~(1 << v)) & ~cubiertos == 0


def _exigir_sin_aislados(G: Graph):
    for v in range(G.n):
        if not G.adj[v]:
            raise SinConjuntoDominante(f"El vértice {v} está aislado: no existe TD-set")


class _BusquedaTD:
    """
    Busca S con incluidos ⊆ S ⊆ permitidos que domine totalmente 'objetivo'.

    Se ramifica sobre el vértice pendiente con menos candidatos, probando
    sus vecinos por etiqueta ascendente; cada hermano posterior excluye a
    los anteriores. Cota inferior: el mayor entre un empaque voraz de
    pendientes con opciones disjuntas y ceil(pendientes / mejor cobertura).
    """

    def __init__(self, G: Graph, objetivo: int, permitidos: int):
        self.G = G
        self.objetivo = objetivo
        self.permitidos = permitidos
        self.delta = max(G.max_degree, 1)
        self.mejor: int | None = None
        self.mejor_tam = 0
        self.primero = False
        self.nodos = 0

    def _voraz(self, incluidos: int) -> int | None:
        elegidos = incluidos
        cubiertos = 0
        for v in iter_bits(incluidos):
            cubiertos |= self.G.adj[v]
        while self.objetivo & ~cubiertos:
            pendientes = self.objetivo & ~cubiertos
            candidatos = self.permitidos & ~elegidos
            mejor_v, mejor_gan = None, 0
            for w in iter_bits(candidatos):
                ganancia = (self.G.adj[w] & pendientes).bit_count()
                if ganancia > mejor_gan:
                    mejor_v, mejor_gan = w, ganancia
            if mejor_v is None:
                return None
            elegidos |= 1 << mejor_v
            cubiertos |= self.G.adj[mejor_v]
        return elegidos

    def _rama(self, elegidos: int, tam: int, cubiertos: int, prohibidos: int):
        self.nodos += 1
        pendientes = self.objetivo & ~cubiertos
        if not pendientes:
            if tam < self.mejor_tam:
                self.mejor, self.mejor_tam = elegidos, tam
            return
        faltan = pendientes.bit_count()
        if tam + -(-faltan // self.delta) >= self.mejor_tam:
            return
        libres = self.permitidos & ~prohibidos & ~elegidos
        opciones_pivote, cuenta_pivote = 0, None
        # empaque: pendientes con opciones disjuntas piden dominadores distintos
        usados, empaque, candidatos = 0, 0, 0
        for u in iter_bits(pendientes):
            opciones = self.G.adj[u] & libres
            cuenta = opciones.bit_count()
            if cuenta == 0:
                return
            if cuenta_pivote is None or cuenta < cuenta_pivote:
                opciones_pivote, cuenta_pivote = opciones, cuenta
            if not opciones & usados:
                usados |= opciones
                empaque += 1
            candidatos |= opciones
        cobertura = max((self.G.adj[w] & pendientes).bit_count() for w in iter_bits(candidatos))
        if tam + max(empaque, -(-faltan // cobertura)) >= self.mejor_tam:
            return
        for w in iter_bits(opciones_pivote):
            self._rama(elegidos | 1 << w, tam + 1, cubiertos | self.G.adj[w], prohibidos)
            if self.primero and self.mejor is not None:
                return
            prohibidos |= 1 << w

    def _cubiertos(self, conjunto: int) -> int:
        cubiertos = 0
        for v in iter_bits(conjunto):
            cubiertos |= self.G.adj[v]
        return cubiertos

    def minimo(self, incluidos: int = 0) -> int | None:
        inicial = self._voraz(incluidos)
        if inicial is None:
            # sin solución voraz puede no haber ninguna; se busca igual con cota n + 1
            self.mejor, self.mejor_tam = None, self.G.n + 1
        else:
            self.mejor, self.mejor_tam = inicial, inicial.bit_count()
        self.primero = False
        self._rama(incluidos, incluidos.bit_count(), self._cubiertos(incluidos), ~self.permitidos)
        return self.mejor

    def existe(self, incluidos: int, excluidos: int, limite: int) -> int | None:
        """Algún S con incluidos ⊆ S, S ∩ excluidos = ∅ y |S| <= limite."""
        self.mejor, self.mejor_tam = None, limite + 1
        self.primero = True
        self._rama(incluidos, incluidos.bit_count(), self._cubiertos(incluidos), ~self.permitidos | excluidos)
        return self.mejor


def _minimo_lexicografico(busqueda: _BusquedaTD, solucion: int, incluidos: int) -> int:
    """
    Entre los conjuntos óptimos del tamaño de 'solucion', el de secuencia
    ordenada lexicográficamente menor: se decide cada vértice en orden
    ascendente, incluyéndolo siempre que siga existiendo un óptimo.
    """
    k = solucion.bit_count()
    testigo = solucion
    fijos_dentro, fijos_fuera = incluidos, 0
    for c in range(busqueda.G.n):
        if fijos_dentro.bit_count() == k:
            break
        if fijos_dentro >> c & 1:
            continue
        if not busqueda.permitidos >> c & 1:
            fijos_fuera |= 1 << c
            continue
        if testigo >> c & 1:
            fijos_dentro |= 1 << c
            continue
        otro = busqueda.existe(fijos_dentro | 1 << c, fijos_fuera, k)
        if otro is not None:
            fijos_dentro |= 1 << c
            testigo = otro
        else:
            fijos_fuera |= 1 << c
    return testigo


def _gamma_t_conexo(G: Graph) -> int:
    busqueda = _BusquedaTD(G, G.todos, G.todos)
    solucion = busqueda.minimo()
    solucion = _minimo_lexicografico(busqueda, solucion, 0)
    logger.debug(f"[BNB] n={G.n} m={G.m} gamma_t={solucion.bit_count()} nodos={busqueda.nodos}")
    return solucion


def gamma_t(G: Graph) -> TDCertificate:
    """γ_t(G) exacto con testigo; los grafos no conexos se resuelven por componentes."""
    _exigir_sin_aislados(G)
    testigo = 0
    for comp in components(G):
        H, mapa = induce(G, comp)
        inverso = {nuevo: viejo for viejo, nuevo in mapa.items()}
        for v in iter_bits(_gamma_t_conexo(H)):
            testigo |= 1 << inverso[v]
    return TDCertificate(testigo.bit_count(), VertexSet(testigo, G.n))


def gamma_t_oracle(G: Graph, max_n: int = ORACULO_MAX_N) -> TDCertificate:
    """Búsqueda exhaustiva por cardinalidad creciente (orden lexicográfico dentro de cada una)."""
    _exigir_sin_aislados(G)
    if G.n > max_n:
        raise OrdenExcedido(f"El oráculo exhaustivo se limita a n <= {max_n} (n={G.n})")
    for k in range(1, G.n + 1):
        for candidato in itertools.combinations(range(G.n), k):
            S = G.vertex_set(candidato)
            if is_total_dominating(G, S):
                return TDCertificate(k, S)
    raise SinConjuntoDominante("No existe TD-set")


def gamma_t_almost(G: Graph, v: int) -> ATDCertificate:
    """γ_t^a(G;v): mínimo ATD-set respecto de v."""
    if not 0 <= v < G.n:
        raise ValueError(f"Vértice {v} fuera de rango para orden {G.n}")
    objetivo = G.todos & ~(1 << v)
    permitidos = G.todos & ~G.adj[v]
    busqueda = _BusquedaTD(G, objetivo, permitidos)
    solucion = busqueda.minimo(incluidos=1 << v)
    if solucion is None:
        raise SinConjuntoATD(f"No existe ATD-set respecto del vértice {v}")
    solucion = _minimo_lexicografico(busqueda, solucion, 1 << v)
    return ATDCertificate(v, solucion.bit_count(), VertexSet(solucion, G.n))


def extend_atd_to_td(G: Graph, cert: ATDCertificate) -> VertexSet:
    """Un ATD-set más un vecino de v es un TD-set."""
    vecinos = G.adj[cert.vertex]
    if not vecinos:
        raise SinConjuntoDominante(f"El vértice {cert.vertex} está aislado")
    menor = vecinos & -vecinos
    return VertexSet(cert.witness.bits | menor, G.n)


def gamma_t_path_cycle(n: int) -> int:
    """γ_t(P_n) = γ_t(C_n) = ⌊n/2⌋ + ⌈n/4⌉ - ⌊n/4⌋."""
    if n < 3:
        raise ValueError(f"La fórmula requiere n >= 3 (n={n})")
    return n // 2 + -(-n // 4) - n // 4

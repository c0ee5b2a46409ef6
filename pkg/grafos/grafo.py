"""
Grafo simple no dirigido con adyacencia en bitsets (un entero por vértice).

Todas las operaciones devuelven grafos nuevos: un Graph no se modifica
después de construido. Las operaciones derivadas (borrar, contraer,
inducir) reetiquetan de forma densa y devuelven el mapa viejo -> nuevo.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator

logger = logging.getLogger(__name__)

MAX_ORDEN = 128


class GrafoInvalido(ValueError):
    """Entrada que no describe un grafo simple válido."""


def iter_bits(bits: int) -> Iterator[int]:
    """Recorre las posiciones de los bits encendidos en orden ascendente."""
    while bits:
        menor = bits & -bits
        yield menor.bit_length() - 1
        bits ^= menor


def bits_de(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


@dataclass(frozen=True)
class VertexSet:
    """Subconjunto de vértices de un grafo de orden n."""
    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise GrafoInvalido(f"El conjunto contiene etiquetas fuera de 0..{self.n - 1}")

    @classmethod
    def from_iterable(cls, vertices: Iterable[int], n: int) -> VertexSet:
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise GrafoInvalido(f"Vértice {v} fuera de rango para orden {n}")
        return cls(bits_de(vertices), n)

    @classmethod
    def vacio(cls, n: int) -> VertexSet:
        return cls(0, n)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __iter__(self):
        return iter_bits(self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, v):
        return 0 <= v < self.n and bool(self.bits >> v & 1)

    def __str__(self):
        return "{" + ", ".join(str(v) for v in self.members) + "}"


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int = field(init=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDEN:
            raise GrafoInvalido(f"Orden {self.n} no soportado (máximo {MAX_ORDEN})")
        if len(self.adj) != self.n:
            raise GrafoInvalido("La adyacencia debe tener una fila por vértice")
        total = 0
        for v, fila in enumerate(self.adj):
            if fila >> v & 1:
                raise GrafoInvalido(f"Lazo en el vértice {v}")
            if fila >> self.n:
                raise GrafoInvalido(f"El vértice {v} tiene vecinos fuera de rango")
            for u in iter_bits(fila):
                if not self.adj[u] >> v & 1:
                    raise GrafoInvalido(f"Adyacencia no simétrica entre {v} y {u}")
            total += fila.bit_count()
        object.__setattr__(self, 'm', total // 2)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def degrees(self) -> list[int]:
        return [fila.bit_count() for fila in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def todos(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.from_iterable(vertices, self.n)

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construye un grafo simple; los pares repetidos se colapsan en una arista."""
    if not 0 <= n <= MAX_ORDEN:
        raise GrafoInvalido(f"Orden {n} no soportado (máximo {MAX_ORDEN})")
    filas = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GrafoInvalido(f"Arista ({u}, {v}) con extremo fuera de 0..{n - 1}")
        if u == v:
            raise GrafoInvalido(f"Lazo ({u}, {v}) no permitido en un grafo simple")
        filas[u] |= 1 << v
        filas[v] |= 1 << u
    return Graph(n, tuple(filas))


def _reetiquetar(G: Graph, supervivientes: list[int]) -> tuple[Graph, dict[int, int]]:
    mapa = {viejo: nuevo for nuevo, viejo in enumerate(supervivientes)}
    filas = []
    for viejo in supervivientes:
        fila = 0
        for u in iter_bits(G.adj[viejo]):
            if u in mapa:
                fila |= 1 << mapa[u]
        filas.append(fila)
    return Graph(len(supervivientes), tuple(filas)), mapa


def _validar_conjunto(G: Graph, S: VertexSet | Iterable[int]) -> int:
    if isinstance(S, VertexSet):
        if S.n != G.n:
            raise GrafoInvalido(f"Conjunto ligado a orden {S.n}, el grafo tiene orden {G.n}")
        return S.bits
    return G.vertex_set(S).bits


def delete_vertices(G: Graph, S: VertexSet | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G - S, con los supervivientes reetiquetados conservando el orden."""
    quitar = _validar_conjunto(G, S)
    return _reetiquetar(G, [v for v in range(G.n) if not quitar >> v & 1])


def induce(G: Graph, S: VertexSet | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G[S]."""
    dejar = _validar_conjunto(G, S)
    return _reetiquetar(G, list(iter_bits(dejar)))


def contract(G: Graph, x: int, y: int) -> tuple[Graph, dict[int, int]]:
    """
    Reemplaza x e y por un vértice nuevo adyacente a N(x) ∪ N(y) - {x, y}.
    El vértice nuevo ocupa la etiqueta menor de las dos; x e y se mapean a él.
    """
    if x == y:
        raise GrafoInvalido(f"No se puede contraer un vértice consigo mismo ({x})")
    for v in (x, y):
        if not 0 <= v < G.n:
            raise GrafoInvalido(f"Vértice {v} fuera de rango para orden {G.n}")
    destino, quitado = min(x, y), max(x, y)
    union = (G.adj[x] | G.adj[y]) & ~(1 << x) & ~(1 << y)
    filas = list(G.adj)
    for u in range(G.n):
        filas[u] &= ~(1 << x) & ~(1 << y)
    for u in iter_bits(union):
        filas[u] |= 1 << destino
    filas[destino] = union
    filas[quitado] = 0
    intermedio = Graph(G.n, tuple(filas))
    reducido, mapa = _reetiquetar(intermedio, [v for v in range(G.n) if v != quitado])
    mapa[quitado] = mapa[destino]
    return reducido, mapa


def relabel(G: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Aplica la permutación perm (v -> perm[v])."""
    if sorted(perm) != list(range(G.n)):
        raise GrafoInvalido("perm no es una permutación de los vértices")
    filas = [0] * G.n
    for v in range(G.n):
        filas[perm[v]] = bits_de(perm[u] for u in iter_bits(G.adj[v]))
    return Graph(G.n, tuple(filas))


def vecindad(G: Graph, S: VertexSet | Iterable[int]) -> VertexSet:
    """N(S), la vecindad abierta del conjunto."""
    bits = 0
    for v in iter_bits(_validar_conjunto(G, S)):
        bits |= G.adj[v]
    return VertexSet(bits, G.n)


def vecindad_cerrada(G: Graph, S: VertexSet | Iterable[int]) -> VertexSet:
    """N[S] = N(S) ∪ S."""
    return VertexSet(vecindad(G, S).bits | _validar_conjunto(G, S), G.n)


def totally_dominates(G: Graph, A, B) -> bool:
    """A domina totalmente a B si B ⊆ N(A)."""
    b = _validar_conjunto(G, B)
    return b & ~vecindad(G, A).bits == 0


def dominates(G: Graph, A, B) -> bool:
    b = _validar_conjunto(G, B)
    return b & ~vecindad_cerrada(G, A).bits == 0


def _alcanzables(G: Graph, origen: int) -> int:
    visitados = 1 << origen
    frontera = visitados
    while frontera:
        siguiente = 0
        for v in iter_bits(frontera):
            siguiente |= G.adj[v]
        frontera = siguiente & ~visitados
        visitados |= frontera
    return visitados


def components(G: Graph) -> list[VertexSet]:
    """Componentes conexas, ordenadas por su menor etiqueta."""
    restantes = G.todos
    resultado = []
    while restantes:
        origen = (restantes & -restantes).bit_length() - 1
        comp = _alcanzables(G, origen)
        resultado.append(VertexSet(comp, G.n))
        restantes &= ~comp
    return resultado


def is_connected(G: Graph) -> bool:
    if G.n < 1:
        raise GrafoInvalido("La conexidad requiere al menos un vértice")
    return _alcanzables(G, 0) == G.todos

"""
Constructores de las familias extremales y de grafos auxiliares.

Numeración fija por familia: en G_k las secuencias a_1..a_k, b_1..b_k,
c_1..c_k, d_1..d_k ocupan las etiquetas 0..4k-1 en ese orden; F_k y L_k
añaden los vértices de subdivisión al final. Los índices de rol empiezan
en 1, igual que la notación de las familias.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

from grafos.grafo import Graph, from_edges

logger = logging.getLogger(__name__)


class ParametroInvalido(ValueError):
    """Parámetro k o n fuera del rango de la familia."""


class Familia(StrEnum):
    G = "G"
    H = "H"
    GP16 = "GP16"
    F = "F"
    L = "L"
    CORONA = "Corona"


class TipoRol(StrEnum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    SUBDIV_V = "SubdivV"
    SUBDIV_U = "SubdivU"
    HUB = "Hub"
    MID = "Mid"
    LEAF = "Leaf"
    CYCLE = "Cycle"
    OUTER = "Outer"
    INNER = "Inner"


@dataclass(frozen=True, order=True)
class Rol:
    tipo: TipoRol
    indice: int

    def __str__(self):
        return f"{self.tipo}({self.indice})"


@dataclass(frozen=True)
class RoleLabeling:
    """Rol de cada vértice; roles[v] es el rol del vértice v."""
    roles: tuple[Rol, ...]

    def __getitem__(self, v: int) -> Rol:
        return self.roles[v]

    def __len__(self):
        return len(self.roles)

    def items(self):
        return enumerate(self.roles)

    @cached_property
    def _por_rol(self) -> dict[Rol, int]:
        return {rol: v for v, rol in enumerate(self.roles)}

    def vertex_of(self, rol: Rol) -> int:
        try:
            return self._por_rol[rol]
        except KeyError:
            raise ParametroInvalido(f"Ningún vértice tiene el rol {rol}") from None

    def of_type(self, tipo: TipoRol) -> list[int]:
        """Vértices de un tipo, ordenados por índice de rol."""
        return [v for rol, v in sorted(self._por_rol.items()) if rol.tipo == tipo]


@dataclass(frozen=True)
class FamilyMember:
    graph: Graph
    family: Familia
    k: int
    roles: RoleLabeling

    def vertex(self, tipo: TipoRol, indice: int) -> int:
        return vertex_of(self, Rol(tipo, indice))

    @property
    def nombre(self) -> str:
        if self.family == Familia.GP16:
            return "GP16"
        return f"{self.family}_{self.k}"

    def __str__(self):
        return f"{self.nombre} (n={self.graph.n}, m={self.graph.m})"


def vertex_of(member: FamilyMember, rol: Rol) -> int:
    return member.roles.vertex_of(rol)


# ------------------------------------------------------------------
# Grafos básicos
# ------------------------------------------------------------------

def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ParametroInvalido(f"C_n requiere n >= 3 (n={n})")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ParametroInvalido(f"P_n requiere n >= 1 (n={n})")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ParametroInvalido(f"K_n requiere n >= 1 (n={n})")
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_star(n: int) -> Graph:
    """K_{1,n}: el centro es el vértice 0."""
    if n < 1:
        raise ParametroInvalido(f"K_1,n requiere n >= 1 (n={n})")
    return from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def gen_generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): ciclo exterior u_0..u_{n-1}, radios u_i w_i y aristas interiores w_i w_{i+k}."""
    if n < 3 or not 1 <= k < n / 2:
        raise ParametroInvalido(f"GP(n, k) requiere n >= 3 y 1 <= k < n/2 (n={n}, k={k})")
    aristas = []
    for i in range(n):
        aristas.append((i, (i + 1) % n))
        aristas.append((i, n + i))
        aristas.append((n + i, n + (i + k) % n))
    return from_edges(2 * n, aristas)


# ------------------------------------------------------------------
# Familias cúbicas
# ------------------------------------------------------------------

def _etiquetas_abcd(k: int):
    a = lambda i: i - 1
    b = lambda i: k + i - 1
    c = lambda i: 2 * k + i - 1
    d = lambda i: 3 * k + i - 1
    return a, b, c, d


def _roles_abcd(k: int) -> list[Rol]:
    return [Rol(tipo, i) for tipo in (TipoRol.A, TipoRol.B, TipoRol.C, TipoRol.D) for i in range(1, k + 1)]


def _aristas_G(k: int) -> list[tuple[int, int]]:
    a, b, c, d = _etiquetas_abcd(k)
    aristas = []
    for i in range(1, k + 1):
        aristas += [(a(i), b(i)), (c(i), d(i)), (a(i), d(i)), (b(i), c(i))]
        if i < k:
            aristas += [(b(i), a(i + 1)), (d(i), c(i + 1))]
    aristas += [(a(1), c(1)), (b(k), d(k))]
    return aristas


def gen_G(k: int) -> FamilyMember:
    """G_k: caminos a_1 b_1 ... a_k b_k y c_1 d_1 ... c_k d_k, con a_i d_i, b_i c_i, a_1 c_1 y b_k d_k."""
    if k < 1:
        raise ParametroInvalido(f"G_k requiere k >= 1 (k={k})")
    G = from_edges(4 * k, _aristas_G(k))
    return FamilyMember(G, Familia.G, k, RoleLabeling(tuple(_roles_abcd(k))))


def gen_H(k: int) -> FamilyMember:
    """H_k: G_k sin a_1 c_1 ni b_k d_k, con a_1 b_k y c_1 d_k."""
    if k < 2:
        raise ParametroInvalido(f"H_k requiere k >= 2 (k={k})")
    a, b, c, d = _etiquetas_abcd(k)
    quitar = {(a(1), c(1)), (b(k), d(k))}
    aristas = [e for e in _aristas_G(k) if e not in quitar]
    aristas += [(a(1), b(k)), (c(1), d(k))]
    G = from_edges(4 * k, aristas)
    return FamilyMember(G, Familia.H, k, RoleLabeling(tuple(_roles_abcd(k))))


def gen_GP16() -> FamilyMember:
    """GP(8, 3), el grafo de Möbius-Kantor: Outer(i) = u_{i-1}, Inner(i) = w_{i-1}."""
    G = gen_generalized_petersen(8, 3)
    roles = [Rol(TipoRol.OUTER, i) for i in range(1, 9)] + [Rol(TipoRol.INNER, i) for i in range(1, 9)]
    return FamilyMember(G, Familia.GP16, 4, RoleLabeling(tuple(roles)))


# ------------------------------------------------------------------
# Familias de grado mínimo 2
# ------------------------------------------------------------------

def _ciclo_con_roles(n: int, familia: Familia) -> FamilyMember:
    roles = tuple(Rol(TipoRol.CYCLE, i) for i in range(1, n + 1))
    return FamilyMember(gen_cycle(n), familia, 0, RoleLabeling(roles))


def _subdividir(aristas: list[tuple[int, int]], u: int, v: int, primero: int) -> list[tuple[int, int]]:
    """Reemplaza la arista uv por el camino u p p+1 p+2 v."""
    restantes = [e for e in aristas if e not in ((u, v), (v, u))]
    if len(restantes) != len(aristas) - 1:
        raise ParametroInvalido(f"La arista {u}{v} no existe")
    p = primero
    return restantes + [(u, p), (p, p + 1), (p + 1, p + 2), (p + 2, v)]


def gen_F(k: int) -> FamilyMember:
    """F_k: G_k con a_1 c_1 subdividida tres veces (camino a_1 v_1 v_2 v_3 c_1); F_0 = C_3."""
    if k < 0:
        raise ParametroInvalido(f"F_k requiere k >= 0 (k={k})")
    if k == 0:
        return _ciclo_con_roles(3, Familia.F)
    a, _, c, _ = _etiquetas_abcd(k)
    aristas = _subdividir(_aristas_G(k), a(1), c(1), 4 * k)
    roles = _roles_abcd(k) + [Rol(TipoRol.SUBDIV_V, j) for j in (1, 2, 3)]
    return FamilyMember(from_edges(4 * k + 3, aristas), Familia.F, k, RoleLabeling(tuple(roles)))


def gen_L(k: int) -> FamilyMember:
    """L_k: F_k con b_k d_k subdividida tres veces (camino b_k u_1 u_2 u_3 d_k); L_0 = C_6."""
    if k < 0:
        raise ParametroInvalido(f"L_k requiere k >= 0 (k={k})")
    if k == 0:
        return _ciclo_con_roles(6, Familia.L)
    a, b, c, d = _etiquetas_abcd(k)
    aristas = _subdividir(_aristas_G(k), a(1), c(1), 4 * k)
    aristas = _subdividir(aristas, b(k), d(k), 4 * k + 3)
    roles = (_roles_abcd(k)
             + [Rol(TipoRol.SUBDIV_V, j) for j in (1, 2, 3)]
             + [Rol(TipoRol.SUBDIV_U, j) for j in (1, 2, 3)])
    return FamilyMember(from_edges(4 * k + 6, aristas), Familia.L, k, RoleLabeling(tuple(roles)))


# ------------------------------------------------------------------
# 2-corona
# ------------------------------------------------------------------

def two_corona(H: Graph) -> FamilyMember:
    """
    H ∘ P_2: a cada vértice i de H se le cuelga el camino i - (n+i) - (2n+i).
    Hub(i), Mid(i) y Leaf(i) usan índices desde 1.
    """
    n = H.n
    if n < 1:
        raise ParametroInvalido("La 2-corona requiere un grafo de orden >= 1")
    aristas = list(H.edges())
    for i in range(n):
        aristas += [(i, n + i), (n + i, 2 * n + i)]
    roles = ([Rol(TipoRol.HUB, i) for i in range(1, n + 1)]
             + [Rol(TipoRol.MID, i) for i in range(1, n + 1)]
             + [Rol(TipoRol.LEAF, i) for i in range(1, n + 1)])
    return FamilyMember(from_edges(3 * n, aristas), Familia.CORONA, n, RoleLabeling(tuple(roles)))


def gen_corona_cycle(k: int) -> FamilyMember:
    """C_k ∘ P_2, el miembro de orden 3k de la familia de grado mínimo 1."""
    if k < 3:
        raise ParametroInvalido(f"C_k ∘ P_2 requiere k >= 3 (k={k})")
    return two_corona(gen_cycle(k))


GENERADORES = {
    Familia.G: gen_G,
    Familia.H: gen_H,
    Familia.F: gen_F,
    Familia.L: gen_L,
    Familia.CORONA: gen_corona_cycle,
}


def generate(familia: Familia | str, k: int | None = None) -> FamilyMember:
    """Despacha por etiqueta de familia; GP16 no lleva parámetro."""
    familia = Familia(familia)
    if familia == Familia.GP16:
        return gen_GP16()
    if k is None:
        raise ParametroInvalido(f"La familia {familia} requiere el parámetro k")
    miembro = GENERADORES[familia](k)
    logger.debug(f"[FAMILIAS] Generado {miembro}")
    return miembro

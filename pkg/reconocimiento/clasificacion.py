"""
Reconocimiento estructural de las familias extremales y veredicto de la cota
m <= Δ(n - γ_t).

- find_two_paths / find_special_two_paths: 2-caminos y 2-caminos especiales.
- reduce_special: contrae v1 con v5 y borra v2, v3, v4.
- is_in_Gdone / is_in_Gdtwo / is_in_Gcub: pertenencia a cada familia, con el
  isomorfismo al miembro generado como testigo.
- check_bound: informe de extremalidad con γ_t exacto.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cache

from dominacion.solver import gamma_t
from familias.generadores import (
    FamilyMember, gen_corona_cycle, gen_cycle, gen_F, gen_G, gen_GP16, gen_H, gen_L,
)
from grafos.canonico import CanonicalForm, are_isomorphic, canonical_form, es_isomorfismo, find_isomorphism
from grafos.grafo import Graph, components, contract, delete_vertices, induce, is_connected, iter_bits

logger = logging.getLogger(__name__)


class CotaNoAplicable(ValueError):
    """El grafo no cumple las hipótesis de la cota (componente de orden <= 2, Δ <= 1)."""


class InconsistenciaInterna(RuntimeError):
    """Dos caracterizaciones discrepan o la cota se viola: error fatal."""


class CaminoNoEspecial(ValueError):
    pass


class Veredicto(StrEnum):
    GDONE = "Gdone"
    GDTWO_F = "GdtwoF"
    GDTWO_L = "GdtwoL"
    GCUB_G = "GcubG"
    GCUB_H = "GcubH"
    GCUB_GP16 = "GcubGP16"
    NINGUNA = "NotInFamilies"


@dataclass(frozen=True)
class SpecialTwoPath:
    v1: int
    v2: int
    v3: int
    v4: int
    v5: int
    x: int
    y: int

    @property
    def camino(self) -> tuple[int, int, int, int, int]:
        return self.v1, self.v2, self.v3, self.v4, self.v5

    @property
    def internos(self) -> tuple[int, int, int]:
        return self.v2, self.v3, self.v4


@dataclass(frozen=True)
class Classification:
    verdict: Veredicto
    k: int | None = None
    witness: dict[int, int] | None = field(default=None, compare=False)
    nota: str = field(default="", compare=False)

    @property
    def in_families(self) -> bool:
        return self.verdict != Veredicto.NINGUNA

    def to_dict(self) -> dict:
        return {"family": str(self.verdict), "k": self.k}

    def __str__(self):
        if self.k is None:
            return str(self.verdict)
        return f"{self.verdict}({self.k})"


NINGUNA = Classification(Veredicto.NINGUNA)


@dataclass(frozen=True)
class ExtremalityReport:
    n: int
    m: int
    max_degree: int
    effective_delta: int
    gamma_t: int
    bound: int
    is_extremal: bool
    classification: Classification
    conexo: bool = True

    @property
    def coherente(self) -> bool:
        """Para grafos conexos: extremal si y solo si pertenece a alguna familia."""
        return not self.conexo or self.is_extremal == self.classification.in_families

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "max_degree": self.max_degree,
            "effective_delta": self.effective_delta,
            "gamma_t": self.gamma_t,
            "bound": self.bound,
            "extremal": self.is_extremal,
            "classification": self.classification.to_dict(),
        }


# ------------------------------------------------------------------
# Cota
# ------------------------------------------------------------------

def effective_delta(G: Graph) -> int:
    """3 si Δ(G) = 2, Δ(G) si Δ(G) >= 3."""
    delta = G.max_degree
    if delta <= 1:
        raise CotaNoAplicable(f"La cota requiere Δ(G) >= 2 (Δ(G)={delta})")
    return 3 if delta == 2 else delta


def check_bound(G: Graph, gamma: int | None = None) -> ExtremalityReport:
    """
    Informe de extremalidad. gamma permite pasar un γ_t ya calculado.
    Una violación de la cota es fatal.
    """
    if G.n == 0:
        raise CotaNoAplicable("El grafo vacío no cumple las hipótesis de la cota")
    comps = components(G)
    for comp in comps:
        if len(comp) <= 2:
            raise CotaNoAplicable(f"La componente {comp} tiene orden {len(comp)} <= 2")
    eff = effective_delta(G)
    if gamma is None:
        gamma = gamma_t(G).value
    cota = eff * (G.n - gamma)
    if G.m > cota:
        logger.error(f"[COTA] Violación: n={G.n} m={G.m} gamma_t={gamma} cota={cota}")
        raise InconsistenciaInterna(f"m={G.m} excede la cota {cota}")
    conexo = len(comps) == 1
    clasificacion = classify(G, gamma=gamma if conexo else None)
    return ExtremalityReport(
        n=G.n, m=G.m, max_degree=G.max_degree, effective_delta=eff, gamma_t=gamma,
        bound=cota, is_extremal=G.m == cota, classification=clasificacion, conexo=conexo,
    )


# ------------------------------------------------------------------
# 2-caminos
# ------------------------------------------------------------------

def find_two_paths(G: Graph) -> list[tuple[int, ...]]:
    """
    Todos los 2-caminos: extremos de grado >= 3 e internos (al menos uno) de
    grado 2. Cada camino aparece una vez, con el extremo menor primero.
    """
    grados = G.degrees
    encontrados = []
    for s in range(G.n):
        if grados[s] < 3:
            continue
        for w in iter_bits(G.adj[s]):
            if grados[w] != 2:
                continue
            camino = [s, w]
            previo, actual = s, w
            while grados[actual] == 2:
                siguiente = next(u for u in iter_bits(G.adj[actual]) if u != previo)
                camino.append(siguiente)
                previo, actual = actual, siguiente
            if grados[actual] >= 3 and actual != s and s < actual:
                encontrados.append(tuple(camino))
    return sorted(encontrados)


def _especial(G: Graph, camino: tuple[int, ...]) -> SpecialTwoPath | None:
    if len(camino) != 5:
        return None
    v1, v2, v3, v4, v5 = camino
    if G.degree(v1) != 3 or G.degree(v5) != 3:
        return None
    comunes = list(iter_bits(G.adj[v1] & G.adj[v5]))
    if len(comunes) != 2 or any(G.degree(z) != 3 for z in comunes):
        return None
    x, y = comunes
    return SpecialTwoPath(v1, v2, v3, v4, v5, x, y)


def find_special_two_paths(G: Graph) -> list[SpecialTwoPath]:
    """2-caminos v1..v5 donde v1 y v5 tienen exactamente dos vecinos comunes x < y, todos de grado 3."""
    especiales = []
    for camino in find_two_paths(G):
        p = _especial(G, camino)
        if p is not None:
            especiales.append(p)
    return especiales


def reduce_special(G: Graph, p: SpecialTwoPath) -> tuple[Graph, dict[int, int]]:
    """Contrae v1 y v5 y borra v2, v3, v4. Devuelve el grafo y el mapa viejo -> nuevo."""
    valido = all(0 <= v < G.n for v in p.camino) and _especial(G, p.camino) == p
    valido = valido and G.degree(p.v2) == G.degree(p.v3) == G.degree(p.v4) == 2
    valido = valido and all(G.has_edge(a, b) for a, b in zip(p.camino, p.camino[1:]))
    if not valido:
        raise CaminoNoEspecial(f"{p} no es un 2-camino especial del grafo")
    sin_internos, mapa1 = delete_vertices(G, p.internos)
    reducido, mapa2 = contract(sin_internos, mapa1[p.v1], mapa1[p.v5])
    mapa = {viejo: mapa2[nuevo] for viejo, nuevo in mapa1.items()}
    return reducido, mapa


def degree_two_subgraph(G: Graph) -> tuple[Graph, dict[int, int]]:
    """Subgrafo inducido por los vértices de grado 2."""
    return induce(G, [v for v in range(G.n) if G.degree(v) == 2])


def theorem_b_d_applies(G: Graph) -> bool:
    """δ(G) >= 2 y cada componente del subgrafo de grado 2 tiene orden <= 2."""
    if G.n == 0 or G.min_degree < 2:
        return False
    F, _ = degree_two_subgraph(G)
    return all(len(comp) <= 2 for comp in components(F))


# ------------------------------------------------------------------
# Familias
# ------------------------------------------------------------------

def _confirmar(G: Graph, miembro: FamilyMember, verdict: Veredicto, k: int | None) -> Classification:
    mapa = find_isomorphism(G, miembro.graph)
    if mapa is None:
        logger.error(f"[CLASIFICACION] La reducción acepta {verdict} pero no es isomorfo a {miembro}")
        raise InconsistenciaInterna(f"Reconocido como {verdict}({k}) pero no isomorfo a {miembro.nombre}")
    return Classification(verdict, k, witness=mapa)


def is_in_Gdone(G: Graph) -> Classification:
    """C_k ∘ P_2 con k >= 3: los vértices de grado 3 forman un ciclo y cada uno lleva un P_2 colgante."""
    n = G.n
    if n < 9 or n % 3 or not is_connected(G):
        return NINGUNA
    grados = G.degrees
    if any(d not in (1, 2, 3) for d in grados):
        return NINGUNA
    hubs = [v for v in range(n) if grados[v] == 3]
    k = n // 3
    if len(hubs) != k or grados.count(2) != k or grados.count(1) != k:
        return NINGUNA
    mascara_hubs = sum(1 << h for h in hubs)
    medio_de = {}
    for h in hubs:
        if (G.adj[h] & mascara_hubs).bit_count() != 2:
            return NINGUNA
        (medio,) = iter_bits(G.adj[h] & ~mascara_hubs)
        if grados[medio] != 2:
            return NINGUNA
        (hoja,) = iter_bits(G.adj[medio] & ~(1 << h))
        if grados[hoja] != 1:
            return NINGUNA
        medio_de[h] = (medio, hoja)
    ciclo, _ = induce(G, hubs)
    if not is_connected(ciclo):
        return NINGUNA

    # recorrer el ciclo de hubs desde el menor, hacia su vecino menor
    orden = [hubs[0]]
    previo = None
    actual = hubs[0]
    while True:
        siguientes = [u for u in iter_bits(G.adj[actual] & mascara_hubs) if u != previo]
        siguiente = min(siguientes)
        if siguiente == orden[0]:
            break
        orden.append(siguiente)
        previo, actual = actual, siguiente
    mapa = {}
    for i, h in enumerate(orden):
        medio, hoja = medio_de[h]
        mapa[h], mapa[medio], mapa[hoja] = i, k + i, 2 * k + i
    miembro = gen_corona_cycle(k)
    if len(orden) != k or not es_isomorfismo(G, miembro.graph, mapa):
        logger.error(f"[GDONE] Estructura aceptada pero el mapa a {miembro} no es isomorfismo")
        raise InconsistenciaInterna(f"Testigo inválido para C_{k} ∘ P_2")
    return Classification(Veredicto.GDONE, k, witness=mapa)


def _reduce_a_base(G: Graph, fallidos: set[CanonicalForm], nivel: int = 0) -> bool:
    if G.n < 3 or G.min_degree < 2 or not is_connected(G):
        return False
    n = G.n
    if n == 3:
        return are_isomorphic(G, gen_cycle(3))
    if n == 6:
        return are_isomorphic(G, gen_cycle(6))
    if n % 4 in (0, 1):
        return False
    forma = canonical_form(G)
    if forma in fallidos:
        return False
    for p in find_special_two_paths(G):
        reducido, _ = reduce_special(G, p)
        logger.debug(f"[GDTWO] nivel={nivel} n={n} reduce {p.camino} -> n={reducido.n}")
        if _reduce_a_base(reducido, fallidos, nivel + 1):
            return True
    fallidos.add(forma)
    return False


def is_in_Gdtwo(G: Graph) -> Classification:
    """Reducción recursiva por 2-caminos especiales hasta C_3 o C_6."""
    if G.n < 3 or G.min_degree < 2 or not is_connected(G):
        return NINGUNA
    if not _reduce_a_base(G, set()):
        return NINGUNA
    if G.n % 4 == 3:
        k = (G.n - 3) // 4
        return _confirmar(G, gen_F(k), Veredicto.GDTWO_F, k)
    k = (G.n - 6) // 4
    return _confirmar(G, gen_L(k), Veredicto.GDTWO_L, k)


@cache
def _formas_cubicas(k: int) -> tuple[tuple[Veredicto, int | None, FamilyMember, CanonicalForm], ...]:
    miembros = [(Veredicto.GCUB_G, k, gen_G(k))]
    if k >= 2:
        miembros.append((Veredicto.GCUB_H, k, gen_H(k)))
    if k == 4:
        miembros.append((Veredicto.GCUB_GP16, None, gen_GP16()))
    return tuple((v, kk, m, canonical_form(m.graph)) for v, kk, m in miembros)


def is_in_Gcub(G: Graph, gamma: int | None = None) -> Classification:
    """
    Cúbico conexo de orden 4k: se compara con G_k, H_k y GP16. Para δ >= 3
    la pertenencia debe coincidir con γ_t = n/2; si no, es un error fatal.
    """
    if G.n == 0 or G.min_degree < 3 or not is_connected(G):
        return NINGUNA
    encontrado = None
    if G.max_degree == 3 and G.n % 4 == 0:
        forma = canonical_form(G)
        for verdict, k, miembro, forma_miembro in _formas_cubicas(G.n // 4):
            if forma == forma_miembro:
                encontrado = (verdict, k, miembro)
                break
    if gamma is None:
        gamma = gamma_t(G).value
    if (2 * gamma == G.n) != (encontrado is not None):
        logger.error(f"[GCUB] n={G.n} gamma_t={gamma} miembro={encontrado is not None}: caracterizaciones discrepan")
        raise InconsistenciaInterna(
            f"γ_t = n/2 es {2 * gamma == G.n} pero la pertenencia a la familia cúbica es {encontrado is not None}"
        )
    if encontrado is None:
        return NINGUNA
    verdict, k, miembro = encontrado
    return _confirmar(G, miembro, verdict, k)


def classify(G: Graph, gamma: int | None = None) -> Classification:
    """Primera familia que acepta; las tres son disjuntas porque sus δ son 1, 2 y 3."""
    if G.n == 0 or not is_connected(G):
        return Classification(Veredicto.NINGUNA, nota="Grafo no conexo: la caracterización es para grafos conexos")
    for prueba in (is_in_Gdone, is_in_Gdtwo):
        resultado = prueba(G)
        if resultado.in_families:
            return resultado
    return is_in_Gcub(G, gamma=gamma)

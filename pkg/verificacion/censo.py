"""
Censo de la cota m <= Δ(n - γ_t) sobre la enumeración interna o sobre un
flujo graph6.

Los grafos viajan a los workers como cadenas graph6; cada worker calcula
γ_t, el informe de extremalidad y la clasificación. La mezcla final ordena
por graph6 canónico, así que el resultado no depende del número de workers
ni del orden de llegada.
"""
from __future__ import annotations

import itertools
import logging
import multiprocessing
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from dominacion.solver import gamma_t
from grafos.canonico import canonical_relabel
from grafos.graph6 import LineaGraph6, graph6_decode, graph6_encode
from grafos.grafo import Graph, is_connected
from reconocimiento.clasificacion import InconsistenciaInterna, check_bound

from .enumeracion import ENUM_MAX_N, enumerate_connected

logger = logging.getLogger(__name__)

VERIFICADO = "verificado"
OMITIDO = "omitido"


@dataclass(frozen=True)
class ResultadoGrafo:
    """Salida de un worker para un grafo."""
    linea: int | None
    graph6: str
    canonico: str
    estado: str
    n: int
    m: int = 0
    gamma_t: int | None = None
    extremal: bool = False
    familia: str = ""
    k: int | None = None
    violacion: str | None = None
    nota: str = ""


@dataclass(frozen=True)
class GrafoCenso:
    graph6: str
    n: int
    m: int
    gamma_t: int
    familia: str
    k: int | None
    linea: int | None = None

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6, "n": self.n, "m": self.m, "gamma_t": self.gamma_t,
            "classification": {"family": self.familia, "k": self.k},
        }


@dataclass(frozen=True)
class Violacion:
    linea: int | None
    graph6: str
    motivo: str

    def to_dict(self) -> dict:
        return {"linea": self.linea, "graph6": self.graph6, "motivo": self.motivo}


@dataclass(frozen=True)
class ErrorParseo:
    linea: int
    texto: str
    mensaje: str
    offset: int

    def to_dict(self) -> dict:
        return {"linea": self.linea, "texto": self.texto, "mensaje": self.mensaje, "offset": self.offset}


@dataclass
class EnumerationSummary:
    fuente: str
    por_orden: dict[int, int] = field(default_factory=dict)
    extremales: list[GrafoCenso] = field(default_factory=list)
    violaciones: list[Violacion] = field(default_factory=list)
    errores: list[ErrorParseo] = field(default_factory=list)
    omitidos: int = 0
    verificados: int = 0
    segundos: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violaciones

    @property
    def lineas(self) -> int:
        return len(self.errores) + self.omitidos + self.verificados

    def to_dict(self, incluir_tiempo: bool = True) -> dict:
        datos = {
            "fuente": self.fuente,
            "lineas": self.lineas,
            "verificados": self.verificados,
            "omitidos": self.omitidos,
            "errores_parseo": [e.to_dict() for e in self.errores],
            "por_orden": {str(n): c for n, c in sorted(self.por_orden.items())},
            "extremales": [g.to_dict() for g in self.extremales],
            "violaciones": [v.to_dict() for v in self.violaciones],
            "ok": self.ok,
        }
        if incluir_tiempo:
            datos["segundos"] = round(self.segundos, 3)
        return datos


def _graph6_canonico(G: Graph) -> str:
    return graph6_encode(canonical_relabel(G)).decode("ascii")


def _verificar_uno(item: tuple[int | None, str]) -> ResultadoGrafo:
    linea, texto = item
    G = graph6_decode(texto)
    canonico = _graph6_canonico(G)
    if G.n < 3 or not is_connected(G):
        return ResultadoGrafo(linea, texto, canonico, OMITIDO, G.n, G.m,
                              nota="se requiere un grafo conexo de orden >= 3")
    gamma = gamma_t(G).value
    try:
        informe = check_bound(G, gamma=gamma)
    except InconsistenciaInterna as e:
        return ResultadoGrafo(linea, texto, canonico, VERIFICADO, G.n, G.m, gamma, violacion=str(e))
    violacion = None
    if not informe.coherente:
        if informe.is_extremal:
            violacion = f"extremal (m={G.m} = cota) pero fuera de las familias"
        else:
            violacion = f"clasificado como {informe.classification} pero m={G.m} < cota={informe.bound}"
    return ResultadoGrafo(
        linea, texto, canonico, VERIFICADO, G.n, G.m, gamma, informe.is_extremal,
        str(informe.classification.verdict), informe.classification.k, violacion,
    )


def _mapear(items: list[tuple[int | None, str]], jobs: int) -> list[ResultadoGrafo]:
    if jobs <= 1 or len(items) < 2:
        return [_verificar_uno(item) for item in items]
    chunksize = max(1, len(items) // (jobs * 4))
    logger.info(f"[CENSO] Repartiendo {len(items)} grafos entre {jobs} workers (chunksize={chunksize})")
    with multiprocessing.Pool(processes=jobs) as pool:
        return list(pool.imap_unordered(_verificar_uno, items, chunksize=chunksize))


def _reverificar(g: GrafoCenso) -> str | None:
    informe = check_bound(graph6_decode(g.graph6), gamma=g.gamma_t)
    if not informe.is_extremal or not informe.classification.in_families:
        return "el grafo extremal no se re-verifica"
    return None


def verify_theorem(fuente: Iterable[Graph | LineaGraph6], jobs: int = 1, nombre: str = "") -> EnumerationSummary:
    """
    Verifica la cota y la caracterización de igualdad para cada grafo.
    Acepta grafos (enumeración) o líneas ya leídas de un flujo graph6.
    """
    inicio = time.perf_counter()
    resumen = EnumerationSummary(fuente=nombre)
    items: list[tuple[int | None, str]] = []
    for elemento in fuente:
        if isinstance(elemento, LineaGraph6):
            if elemento.omitida:
                resumen.omitidos += 1
            elif elemento.error is not None:
                e = elemento.error
                resumen.errores.append(ErrorParseo(elemento.numero, elemento.texto, e.mensaje, e.offset))
            else:
                items.append((elemento.numero, elemento.texto))
        else:
            items.append((None, graph6_encode(elemento).decode("ascii")))

    resultados = sorted(_mapear(items, jobs), key=lambda r: (r.canonico, r.linea or 0))
    por_orden = Counter()
    vistos = set()
    for r in resultados:
        if r.estado == OMITIDO:
            resumen.omitidos += 1
            logger.info(f"[CENSO] Línea {r.linea} omitida: {r.nota}")
            continue
        resumen.verificados += 1
        por_orden[r.n] += 1
        if r.violacion is not None:
            logger.error(f"[CENSO] Violación en {r.graph6} (línea {r.linea}): {r.violacion}")
            resumen.violaciones.append(Violacion(r.linea, r.graph6, r.violacion))
            continue
        if r.extremal and r.canonico not in vistos:
            vistos.add(r.canonico)
            resumen.extremales.append(GrafoCenso(r.canonico, r.n, r.m, r.gamma_t, r.familia, r.k, r.linea))

    for g in resumen.extremales:
        motivo = _reverificar(g)
        if motivo is not None:
            resumen.violaciones.append(Violacion(g.linea, g.graph6, motivo))
    resumen.por_orden = dict(sorted(por_orden.items()))
    resumen.segundos = time.perf_counter() - inicio
    logger.info(
        f"[CENSO] {nombre}: {resumen.verificados} verificados, {resumen.omitidos} omitidos, "
        f"{len(resumen.errores)} errores, {len(resumen.extremales)} extremales, "
        f"{len(resumen.violaciones)} violaciones en {resumen.segundos:.1f}s"
    )
    return resumen


def verify_enumerated(max_n: int, jobs: int = 1, min_n: int = 3, enum_max_n: int = ENUM_MAX_N) -> EnumerationSummary:
    """Censo exhaustivo de todos los grafos conexos de orden min_n..max_n."""
    grafos = itertools.chain.from_iterable(
        [enumerate_connected(n, max_n=enum_max_n) for n in range(min_n, max_n + 1)]
    )
    return verify_theorem(grafos, jobs=jobs, nombre=f"enumeracion n={min_n}..{max_n}")

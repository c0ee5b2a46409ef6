"""
Codec graph6 (formato de nauty) para grafos de orden n <= 62.

Cabecera de un byte (n + 63); después los bits del triángulo superior por
columnas x(0,1), x(0,2), x(1,2), x(0,3), ... en grupos de 6, cada grupo + 63,
rellenando con ceros. Las cabeceras de 3 y 8 bytes se rechazan.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

from .grafo import Graph, from_edges

logger = logging.getLogger(__name__)

CABECERA = b">>graph6<<"
MAX_ORDEN_GRAPH6 = 62


class Graph6Error(ValueError):
    """Cadena graph6 mal formada; offset es la posición del byte culpable."""

    def __init__(self, mensaje: str, offset: int, linea: int | None = None):
        self.mensaje = mensaje
        self.offset = offset
        self.linea = linea
        donde = f"línea {linea}, byte {offset}" if linea is not None else f"byte {offset}"
        super().__init__(f"{mensaje} ({donde})")


def _bytes_de(texto: bytes | str) -> bytes:
    if isinstance(texto, str):
        try:
            return texto.encode("ascii")
        except UnicodeEncodeError as e:
            raise Graph6Error("Carácter no ASCII", e.start) from e
    return bytes(texto)


def strip_graph6_header(texto: bytes | str) -> tuple[bytes, int]:
    """Quita espacios finales y la cabecera opcional '>>graph6<<'. Devuelve (datos, offset)."""
    datos = _bytes_de(texto).rstrip(b"\r\n \t")
    if datos.startswith(CABECERA):
        return datos[len(CABECERA):], len(CABECERA)
    return datos, 0


def graph6_decode(texto: bytes | str) -> Graph:
    datos, base = strip_graph6_header(texto)
    if not datos:
        raise Graph6Error("Cadena graph6 vacía", base)
    for i, byte in enumerate(datos):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"Byte fuera de rango ({byte})", base + i)
    if datos[0] == 126:
        raise Graph6Error(f"Cabeceras de varios bytes no soportadas (orden > {MAX_ORDEN_GRAPH6})", base)

    n = datos[0] - 63
    total_bits = n * (n - 1) // 2
    esperado = 1 + (total_bits + 5) // 6
    if len(datos) < esperado:
        raise Graph6Error(f"Cadena truncada: se esperaban {esperado} bytes para n={n}", base + len(datos))
    if len(datos) > esperado:
        raise Graph6Error("Basura al final de la cadena", base + esperado)

    aristas = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = datos[1 + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                aristas.append((i, j))
            k += 1
    if total_bits % 6:
        relleno = (datos[-1] - 63) & ((1 << (6 - total_bits % 6)) - 1)
        if relleno:
            raise Graph6Error("Bits de relleno distintos de cero", base + esperado - 1)
    return from_edges(n, aristas)


def graph6_encode(G: Graph) -> bytes:
    if G.n > MAX_ORDEN_GRAPH6:
        raise Graph6Error(f"Orden {G.n} excede el máximo graph6 soportado ({MAX_ORDEN_GRAPH6})", 0)
    salida = bytearray([G.n + 63])
    grupo = 0
    usados = 0
    for j in range(1, G.n):
        for i in range(j):
            grupo = grupo << 1 | (G.adj[i] >> j & 1)
            usados += 1
            if usados == 6:
                salida.append(grupo + 63)
                grupo = usados = 0
    if usados:
        salida.append((grupo << (6 - usados)) + 63)
    return bytes(salida)


@dataclass(frozen=True)
class LineaGraph6:
    """Resultado de leer una línea: grafo, error de parseo, o línea omitida."""
    numero: int
    texto: str
    grafo: Graph | None = None
    error: Graph6Error | None = None
    omitida: bool = False


def read_graph6_lines(lineas: Iterable[bytes | str]) -> Iterator[LineaGraph6]:
    """Lee un flujo de graph6, una línea por grafo, numerando desde 1."""
    for numero, linea in enumerate(lineas, start=1):
        texto = linea.decode("ascii", "replace") if isinstance(linea, bytes) else linea
        texto = texto.rstrip("\r\n")
        limpio = texto.strip()
        if not limpio or limpio == CABECERA.decode():
            yield LineaGraph6(numero, texto, omitida=True)
            continue
        try:
            yield LineaGraph6(numero, limpio, grafo=graph6_decode(limpio))
        except Graph6Error as e:
            logger.warning(f"[GRAPH6] Línea {numero} inválida: {e}")
            yield LineaGraph6(numero, limpio, error=Graph6Error(e.mensaje, e.offset, numero))

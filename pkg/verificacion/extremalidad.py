"""
Comprobación de las familias extremales contra el solver exacto:
m = 3(n - γ_t) y las fórmulas cerradas de γ_t de cada familia.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterator

from dominacion.solver import gamma_t
from familias.generadores import FamilyMember, gen_corona_cycle, gen_F, gen_G, gen_GP16, gen_H, gen_L

logger = logging.getLogger(__name__)

MAX_K = 6


@dataclass(frozen=True)
class FilaFamilia:
    nombre: str
    n: int
    m: int
    gamma_t: int
    gamma_esperado: int

    @property
    def extremal(self) -> bool:
        return self.m == 3 * (self.n - self.gamma_t)

    @property
    def ok(self) -> bool:
        return self.extremal and self.gamma_t == self.gamma_esperado

    def to_dict(self) -> dict:
        return {
            "member": self.nombre, "n": self.n, "m": self.m, "gamma_t": self.gamma_t,
            "expected_gamma_t": self.gamma_esperado, "extremal": self.extremal, "ok": self.ok,
        }


def miembros(max_k: int = MAX_K) -> Iterator[tuple[FamilyMember, int]]:
    """Cada miembro con su γ_t en forma cerrada; F y L hasta max_k - 1, C_j ∘ P_2 hasta j = max_k + 2."""
    rangos: list[tuple[Callable[[int], FamilyMember], range, Callable[[int], int]]] = [
        (gen_G, range(1, max_k + 1), lambda k: 2 * k),
        (gen_H, range(2, max_k + 1), lambda k: 2 * k),
        (gen_F, range(0, max_k), lambda k: 2 * k + 2),
        (gen_L, range(0, max_k), lambda k: 2 * k + 4),
        (gen_corona_cycle, range(3, max_k + 3), lambda j: 2 * j),
    ]
    for generador, ks, formula in rangos:
        for k in ks:
            yield generador(k), formula(k)
    yield gen_GP16(), 8


def verify_families(max_k: int = MAX_K) -> list[FilaFamilia]:
    filas = []
    for miembro, esperado in miembros(max_k):
        G = miembro.graph
        fila = FilaFamilia(miembro.nombre, G.n, G.m, gamma_t(G).value, esperado)
        if not fila.ok:
            logger.error(f"[FAMILIAS] {miembro}: gamma_t={fila.gamma_t} esperado={esperado} extremal={fila.extremal}")
        filas.append(fila)
    logger.info(f"[FAMILIAS] {len(filas)} miembros comprobados, {sum(not f.ok for f in filas)} fallos")
    return filas

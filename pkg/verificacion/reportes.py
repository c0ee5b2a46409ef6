"""Salidas legibles por máquina: JSON con orden de claves estable y CSV con tablib."""
from __future__ import annotations

import json

import tablib

from reconocimiento.clasificacion import ExtremalityReport

from .censo import EnumerationSummary

CABECERAS_CENSO = ("graph6", "n", "m", "gamma_t", "family", "k")
CABECERAS_INFORME = ("n", "m", "max_degree", "effective_delta", "gamma_t", "bound", "extremal", "family", "k")


def a_json(datos: dict) -> str:
    return json.dumps(datos, ensure_ascii=False)


def informe_json(informe: ExtremalityReport) -> str:
    return a_json(informe.to_dict())


def dataset_informes(informes: list[ExtremalityReport]) -> tablib.Dataset:
    dataset = tablib.Dataset(headers=list(CABECERAS_INFORME), title="Informes")
    for r in informes:
        c = r.classification
        dataset.append((r.n, r.m, r.max_degree, r.effective_delta, r.gamma_t, r.bound,
                        r.is_extremal, str(c.verdict), "" if c.k is None else c.k))
    return dataset


def dataset_censo(resumen: EnumerationSummary) -> tablib.Dataset:
    """Una fila por grafo extremal del censo."""
    dataset = tablib.Dataset(headers=list(CABECERAS_CENSO), title="Extremales")
    for g in resumen.extremales:
        dataset.append((g.graph6, g.n, g.m, g.gamma_t, g.familia, "" if g.k is None else g.k))
    return dataset


def censo_csv(resumen: EnumerationSummary) -> str:
    return dataset_censo(resumen).export("csv")


def informes_csv(informes: list[ExtremalityReport]) -> str:
    return dataset_informes(informes).export("csv")

import itertools
import random

import networkx as nx
from django.test import SimpleTestCase

from familias.generadores import TipoRol, gen_complete, gen_cycle, gen_F, gen_path, gen_star
from grafos.grafo import from_edges, is_connected, relabel
from grafos.graph6 import graph6_decode
from reconocimiento.clasificacion import theorem_b_d_applies

from .solver import (
    OrdenExcedido, SinConjuntoATD, SinConjuntoDominante, extend_atd_to_td, gamma_t, gamma_t_almost,
    gamma_t_oracle, gamma_t_path_cycle, is_almost_total_dominating, is_total_dominating,
)


def conexos_atlas(min_n=2, max_n=7):
    for H in nx.graph_atlas_g():
        if min_n <= H.number_of_nodes() <= max_n and nx.is_connected(H):
            yield from_edges(H.number_of_nodes(), H.edges())


def conexo_aleatorio(rng, n, p):
    """Árbol aleatorio más aristas extra con probabilidad p."""
    aristas = {(rng.randrange(v), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                aristas.add((u, v))
    return from_edges(n, aristas)


class GammaTTests(SimpleTestCase):

    def test_triangulo(self):
        cert = gamma_t(graph6_decode("Bw"))
        self.assertEqual(cert.value, 2)
        self.assertEqual(cert.witness.members, (0, 1))

    def test_camino_p3(self):
        cert = gamma_t(graph6_decode("Bg"))
        self.assertEqual(cert.value, 2)
        self.assertEqual(cert.witness.members, (0, 1))

    def test_vertice_aislado(self):
        with self.assertRaises(SinConjuntoDominante):
            gamma_t(from_edges(3, [(0, 1)]))
        with self.assertRaises(SinConjuntoDominante):
            gamma_t_oracle(from_edges(1, []))

    def test_estrella(self):
        cert = gamma_t(gen_star(3))
        self.assertEqual(cert.value, 2)
        self.assertEqual(cert.witness.members, (0, 1))

    def test_no_conexo_por_componentes(self):
        # C_3 en 0..2 y P_3 en 3..5
        G = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)])
        cert = gamma_t(G)
        self.assertEqual(cert.value, 4)
        self.assertEqual(cert.witness.members, (0, 1, 3, 4))
        self.assertTrue(is_total_dominating(G, cert.witness))

    def test_oraculo_igual_en_todos_los_conexos_hasta_7(self):
        for G in conexos_atlas():
            bnb, oraculo = gamma_t(G), gamma_t_oracle(G)
            self.assertEqual(bnb.value, oraculo.value)
            self.assertEqual(bnb.witness, oraculo.witness)

    def test_oraculo_igual_en_aleatorios(self):
        rng = random.Random(2024)
        for _ in range(200):
            n = rng.randint(8, 12)
            G = conexo_aleatorio(rng, n, rng.choice((0.1, 0.2, 0.35)))
            bnb, oraculo = gamma_t(G), gamma_t_oracle(G)
            self.assertEqual(bnb.value, oraculo.value)
            self.assertEqual(bnb.witness, oraculo.witness)
            self.assertTrue(is_total_dominating(G, bnb.witness))

    def test_invariante_por_permutacion(self):
        rng = random.Random(9)
        for _ in range(40):
            G = conexo_aleatorio(rng, 14, 0.15)
            P = relabel(G, rng.sample(range(G.n), G.n))
            self.assertEqual(gamma_t(G).value, gamma_t(P).value)

    def test_oraculo_rechaza_orden_grande(self):
        with self.assertRaises(OrdenExcedido):
            gamma_t_oracle(gen_cycle(25))
        self.assertEqual(gamma_t_oracle(gen_cycle(8), max_n=8).value, 4)

    def test_formula_caminos_y_ciclos(self):
        self.assertEqual([gamma_t_path_cycle(n) for n in (6, 7, 8)], [4, 4, 4])
        for n in range(3, 21):
            with self.subTest(n=n):
                self.assertEqual(gamma_t(gen_path(n)).value, gamma_t_path_cycle(n))
                self.assertEqual(gamma_t(gen_cycle(n)).value, gamma_t_path_cycle(n))
        with self.assertRaises(ValueError):
            gamma_t_path_cycle(2)


class CasiTotalTests(SimpleTestCase):

    def test_k4(self):
        cert = gamma_t_almost(gen_complete(4), 0)
        self.assertEqual(cert.value, 1)
        self.assertEqual(cert.witness.members, (0,))

    def test_c6(self):
        G = gen_cycle(6)
        cert = gamma_t_almost(G, 0)
        self.assertEqual(cert.value, 3)
        self.assertEqual(cert.witness.members, (0, 2, 3))
        self.assertTrue(is_almost_total_dominating(G, cert.witness, 0))

    def test_f1_en_el_vertice_central_de_la_subdivision(self):
        miembro = gen_F(1)
        v2 = miembro.vertex(TipoRol.SUBDIV_V, 2)
        self.assertEqual(gamma_t_almost(miembro.graph, v2).value, 3)

    def test_sin_atd(self):
        # en P_3 = 0-1-2 el vértice 2 solo tiene vecinos en N(0)
        with self.assertRaises(SinConjuntoATD):
            gamma_t_almost(gen_path(3), 0)
        with self.assertRaises(ValueError):
            gamma_t_almost(gen_complete(3), 5)

    def test_definicion(self):
        G = gen_path(4)
        self.assertTrue(is_almost_total_dominating(G, G.vertex_set([0, 2, 3]), 0))
        self.assertFalse(is_almost_total_dominating(G, G.vertex_set([0, 1]), 0))
        self.assertFalse(is_almost_total_dominating(G, G.vertex_set([2, 3]), 0))

    def test_extender_a_td(self):
        rng = random.Random(4)
        for _ in range(30):
            G = conexo_aleatorio(rng, 10, 0.25)
            v = rng.randrange(G.n)
            try:
                cert = gamma_t_almost(G, v)
            except SinConjuntoATD:
                continue
            S = extend_atd_to_td(G, cert)
            self.assertTrue(is_total_dominating(G, S))
            self.assertGreaterEqual(cert.value + 1, gamma_t(G).value)


class CotasGeneralesTests(SimpleTestCase):
    """Cotas superiores conocidas de γ_t sobre todos los conexos de orden 3 a 7."""

    def test_cotas(self):
        for G in conexos_atlas(min_n=3):
            self.assertTrue(is_connected(G))
            g = gamma_t(G).value
            self.assertLessEqual(3 * g, 2 * G.n)
            if G.min_degree >= 3:
                self.assertLessEqual(2 * g, G.n)
            if theorem_b_d_applies(G):
                self.assertLessEqual(2 * g, G.n)
            for v in range(G.n):
                try:
                    casi = gamma_t_almost(G, v).value
                except SinConjuntoATD:
                    continue
                self.assertLessEqual(g, casi + 1)

    def test_agregar_una_arista_no_aumenta_gamma_t(self):
        for G in conexos_atlas():
            g = gamma_t(G).value
            aristas = G.edges()
            for u, v in itertools.combinations(range(G.n), 2):
                if not G.has_edge(u, v):
                    with self.subTest(grafo=str(G), arista=(u, v)):
                        self.assertLessEqual(gamma_t(from_edges(G.n, aristas + [(u, v)])).value, g)

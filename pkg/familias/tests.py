import os
import unittest

import networkx as nx
from django.test import SimpleTestCase

from dominacion.solver import gamma_t, gamma_t_almost
from grafos.canonico import are_isomorphic
from grafos.grafo import delete_vertices, from_edges

from .generadores import (
    Familia, ParametroInvalido, Rol, TipoRol, gen_complete, gen_corona_cycle, gen_cycle, gen_F, gen_G,
    gen_generalized_petersen, gen_GP16, gen_H, gen_L, gen_path, gen_star, generate, two_corona, vertex_of,
)

LARGOS = os.getenv('DOMINACION_TESTS_LARGOS') == '1'
K_BORRADO = 4 if LARGOS else 2


def desde_networkx(H):
    H = nx.convert_node_labels_to_integers(H)
    return from_edges(H.number_of_nodes(), H.edges())


def gamma_sin(G, v):
    H, _ = delete_vertices(G, [v])
    return gamma_t(H).value


class FormasCerradasTests(SimpleTestCase):

    def test_orden_y_tamano(self):
        for k in range(1, 9):
            with self.subTest(k=k):
                self.assertEqual((gen_G(k).graph.n, gen_G(k).graph.m), (4 * k, 6 * k))
                self.assertEqual((gen_F(k).graph.n, gen_F(k).graph.m), (4 * k + 3, 6 * k + 3))
                self.assertEqual((gen_L(k).graph.n, gen_L(k).graph.m), (4 * k + 6, 6 * k + 6))
                if k >= 2:
                    self.assertEqual((gen_H(k).graph.n, gen_H(k).graph.m), (4 * k, 6 * k))

    def test_cubicos(self):
        for k in range(2, 9):
            for miembro in (gen_G(k), gen_H(k)):
                self.assertEqual(miembro.graph.degrees, [3] * 4 * k)

    def test_grado_dos_solo_en_subdivisiones(self):
        F = gen_F(3)
        self.assertEqual(
            [v for v, d in enumerate(F.graph.degrees) if d == 2],
            F.roles.of_type(TipoRol.SUBDIV_V),
        )
        L = gen_L(3)
        self.assertEqual(
            sorted(v for v, d in enumerate(L.graph.degrees) if d == 2),
            L.roles.of_type(TipoRol.SUBDIV_V) + L.roles.of_type(TipoRol.SUBDIV_U),
        )

    def test_gamma_t_formas_cerradas(self):
        for k in range(1, 4):
            with self.subTest(k=k):
                self.assertEqual(gamma_t(gen_G(k).graph).value, 2 * k)
                self.assertEqual(gamma_t(gen_F(k - 1).graph).value, 2 * k)
                self.assertEqual(gamma_t(gen_L(k - 1).graph).value, 2 * k + 2)
                if k >= 2:
                    self.assertEqual(gamma_t(gen_H(k).graph).value, 2 * k)
        for j in range(3, 6):
            self.assertEqual(gamma_t(gen_corona_cycle(j).graph).value, 2 * j)

    def test_ejemplos_con_gamma(self):
        self.assertEqual(gamma_t(gen_G(2).graph).value, 4)
        self.assertEqual(gamma_t(gen_F(1).graph).value, 4)
        self.assertEqual(gamma_t(gen_L(1).graph).value, 6)
        self.assertEqual(gamma_t(gen_corona_cycle(3).graph).value, 6)

    @unittest.skipUnless(LARGOS, "DOMINACION_TESTS_LARGOS=1 para los órdenes grandes")
    def test_extremalidad_hasta_k_6(self):
        miembros = ([gen_G(k) for k in range(1, 7)] + [gen_H(k) for k in range(2, 7)]
                    + [gen_F(k) for k in range(6)] + [gen_L(k) for k in range(6)]
                    + [gen_corona_cycle(j) for j in range(3, 9)] + [gen_GP16()])
        for miembro in miembros:
            with self.subTest(miembro=miembro.nombre):
                G = miembro.graph
                self.assertEqual(G.m, 3 * (G.n - gamma_t(G).value))


class EstructuraTests(SimpleTestCase):

    def test_g1_es_k4(self):
        self.assertTrue(are_isomorphic(gen_G(1).graph, gen_complete(4)))

    def test_g2_tiene_el_triangulo_a1_b1_c1(self):
        miembro = gen_G(2)
        a1, b1, c1 = (miembro.vertex(t, 1) for t in (TipoRol.A, TipoRol.B, TipoRol.C))
        G = miembro.graph
        self.assertTrue(G.has_edge(a1, b1) and G.has_edge(b1, c1) and G.has_edge(a1, c1))

    def test_adyacencias_por_rol(self):
        miembro = gen_G(3)
        G = miembro.graph
        v = miembro.vertex
        for i in range(1, 4):
            self.assertTrue(G.has_edge(v(TipoRol.A, i), v(TipoRol.B, i)))
            self.assertTrue(G.has_edge(v(TipoRol.C, i), v(TipoRol.D, i)))
            self.assertTrue(G.has_edge(v(TipoRol.A, i), v(TipoRol.D, i)))
            self.assertTrue(G.has_edge(v(TipoRol.B, i), v(TipoRol.C, i)))
        self.assertTrue(G.has_edge(v(TipoRol.B, 1), v(TipoRol.A, 2)))
        self.assertTrue(G.has_edge(v(TipoRol.D, 2), v(TipoRol.C, 3)))
        self.assertTrue(G.has_edge(v(TipoRol.B, 3), v(TipoRol.D, 3)))

    def test_h2_es_el_cubo_y_no_es_g2(self):
        H2 = gen_H(2).graph
        self.assertTrue(are_isomorphic(H2, desde_networkx(nx.hypercube_graph(3))))
        self.assertFalse(are_isomorphic(H2, gen_G(2).graph))

    def test_h_sin_aristas_de_g(self):
        miembro = gen_H(3)
        v = miembro.vertex
        G = miembro.graph
        self.assertFalse(G.has_edge(v(TipoRol.A, 1), v(TipoRol.C, 1)))
        self.assertFalse(G.has_edge(v(TipoRol.B, 3), v(TipoRol.D, 3)))
        self.assertTrue(G.has_edge(v(TipoRol.A, 1), v(TipoRol.B, 3)))
        self.assertTrue(G.has_edge(v(TipoRol.C, 1), v(TipoRol.D, 3)))

    def test_f_y_l_base(self):
        self.assertTrue(are_isomorphic(gen_F(0).graph, gen_cycle(3)))
        self.assertTrue(are_isomorphic(gen_L(0).graph, gen_cycle(6)))
        self.assertEqual(gen_L(0).roles.of_type(TipoRol.CYCLE), list(range(6)))

    def test_subdivisiones(self):
        miembro = gen_L(2)
        v = miembro.vertex
        G = miembro.graph
        camino_v = [v(TipoRol.A, 1)] + [v(TipoRol.SUBDIV_V, j) for j in (1, 2, 3)] + [v(TipoRol.C, 1)]
        camino_u = [v(TipoRol.B, 2)] + [v(TipoRol.SUBDIV_U, j) for j in (1, 2, 3)] + [v(TipoRol.D, 2)]
        for camino in (camino_v, camino_u):
            for x, y in zip(camino, camino[1:]):
                self.assertTrue(G.has_edge(x, y))
            self.assertFalse(G.has_edge(camino[0], camino[-1]))
        self.assertEqual(camino_v[1:4], [8, 9, 10])
        self.assertEqual(camino_u[1:4], [11, 12, 13])

    def test_caminos_y_completos_pequenos(self):
        self.assertEqual(gen_path(2).edges(), [(0, 1)])
        self.assertEqual(gen_path(1).m, 0)
        self.assertEqual(gen_complete(5).m, 10)
        self.assertEqual(gen_star(3).degrees, [3, 1, 1, 1])

    def test_corona(self):
        miembro = two_corona(gen_cycle(4))
        G = miembro.graph
        self.assertEqual((G.n, G.m), (12, 4 + 8))
        self.assertEqual(miembro.family, Familia.CORONA)
        self.assertEqual(miembro.k, 4)
        self.assertEqual(G.degrees.count(1), 4)
        hub, mid, hoja = (miembro.vertex(t, 2) for t in (TipoRol.HUB, TipoRol.MID, TipoRol.LEAF))
        self.assertEqual((hub, mid, hoja), (1, 5, 9))
        self.assertTrue(G.has_edge(hub, mid) and G.has_edge(mid, hoja))
        self.assertEqual(two_corona(from_edges(1, [])).graph.edges(), [(0, 1), (1, 2)])

    def test_roles(self):
        miembro = gen_F(1)
        self.assertEqual(miembro.vertex(TipoRol.SUBDIV_V, 1), 4)
        self.assertEqual(miembro.roles[4], Rol(TipoRol.SUBDIV_V, 1))
        self.assertEqual(vertex_of(miembro, Rol(TipoRol.C, 1)), 2)
        self.assertEqual(str(miembro.roles[0]), "A(1)")
        self.assertEqual(len(miembro.roles), 7)
        self.assertEqual(gen_G(3).roles.of_type(TipoRol.A), [0, 1, 2])
        with self.assertRaises(ParametroInvalido):
            miembro.vertex(TipoRol.SUBDIV_U, 1)
        self.assertEqual(miembro.nombre, "F_1")
        self.assertEqual(gen_GP16().nombre, "GP16")

    def test_parametros_invalidos(self):
        for generador, k in ((gen_G, 0), (gen_H, 1), (gen_F, -1), (gen_L, -1), (gen_corona_cycle, 2),
                             (gen_cycle, 2), (gen_path, 0), (gen_complete, 0), (gen_star, 0)):
            with self.subTest(generador=generador.__name__, k=k):
                with self.assertRaises(ParametroInvalido):
                    generador(k)
        with self.assertRaises(ParametroInvalido):
            gen_generalized_petersen(8, 4)
        with self.assertRaises(ParametroInvalido):
            generate("G")

    def test_generate_despacha(self):
        self.assertEqual(generate("G", 2).graph, gen_G(2).graph)
        self.assertEqual(generate(Familia.L, 1).graph, gen_L(1).graph)
        self.assertEqual(generate("Corona", 3).graph, gen_corona_cycle(3).graph)
        self.assertEqual(generate("GP16").graph, gen_GP16().graph)
        with self.assertRaises(ValueError):
            generate("X", 1)


class GP16Tests(SimpleTestCase):
    """GP(8, 3) como reconstrucción del grafo cúbico excepcional de orden 16."""

    # Transcripción del dibujo: L1, L2 arriba, R1, R2 abajo, columnas A..F y A'..F'
    DIBUJO = [
        ("L1", "A"), ("L1", "C"), ("L1", "L2"), ("L2", "B"), ("L2", "D"),
        ("A", "A'"), ("B", "B'"), ("A", "E"), ("B", "F"),
        ("C", "C'"), ("D", "D'"), ("E", "F"), ("E'", "F'"),
        ("C", "F'"), ("D", "E'"), ("E", "D'"), ("F", "C'"),
        ("R1", "A'"), ("R1", "C'"), ("R1", "R2"), ("R2", "B'"), ("R2", "D'"),
        ("A'", "E'"), ("B'", "F'"),
    ]

    def test_cubico_de_orden_16(self):
        G = gen_GP16().graph
        self.assertEqual((G.n, G.m), (16, 24))
        self.assertEqual(set(G.degrees), {3})

    def test_gamma_t_es_8(self):
        self.assertEqual(gamma_t(gen_GP16().graph).value, 8)

    def test_distinto_de_g4_y_h4(self):
        G = gen_GP16().graph
        self.assertFalse(are_isomorphic(G, gen_G(4).graph))
        self.assertFalse(are_isomorphic(G, gen_H(4).graph))

    def test_moebius_kantor(self):
        self.assertTrue(are_isomorphic(gen_GP16().graph, desde_networkx(nx.moebius_kantor_graph())))

    def test_coincide_con_el_dibujo(self):
        nombres = sorted({v for arista in self.DIBUJO for v in arista})
        indice = {nombre: i for i, nombre in enumerate(nombres)}
        dibujo = from_edges(16, [(indice[u], indice[v]) for u, v in self.DIBUJO])
        self.assertEqual(set(dibujo.degrees), {3})
        self.assertTrue(are_isomorphic(gen_GP16().graph, dibujo))

    def test_petersen(self):
        P = gen_generalized_petersen(5, 2)
        self.assertTrue(are_isomorphic(P, desde_networkx(nx.petersen_graph())))


class BorradoTests(SimpleTestCase):
    """Borrado de vértices y dominación casi total en los miembros de las familias."""

    def test_corona_hojas_y_medios(self):
        for j in (3, 4):
            miembro = gen_corona_cycle(j)
            G = miembro.graph
            g = gamma_t(G).value
            for hoja in miembro.roles.of_type(TipoRol.LEAF):
                self.assertEqual(gamma_sin(G, hoja), g - 1)
            for medio in miembro.roles.of_type(TipoRol.MID):
                self.assertEqual(gamma_t_almost(G, medio).value, g - 1)

    def test_subdivisiones_de_f(self):
        for k in range(1, K_BORRADO + 1):
            miembro = gen_F(k)
            G = miembro.graph
            for w in miembro.roles.of_type(TipoRol.SUBDIV_V):
                with self.subTest(k=k, w=w):
                    self.assertEqual(gamma_sin(G, w), (G.n - 1) // 2)
                    self.assertEqual(gamma_t_almost(G, w).value, (G.n - 1) // 2)

    def test_subdivisiones_de_l(self):
        for k in range(1, K_BORRADO + 1):
            miembro = gen_L(k)
            G = miembro.graph
            for w in miembro.roles.of_type(TipoRol.SUBDIV_V) + miembro.roles.of_type(TipoRol.SUBDIV_U):
                with self.subTest(k=k, w=w):
                    self.assertEqual(gamma_sin(G, w), G.n // 2)
                    self.assertEqual(gamma_t_almost(G, w).value, G.n // 2)

    def _excepciones(self, miembro):
        v = miembro.vertex
        k = miembro.k
        if miembro.family == Familia.G:
            return {v(TipoRol.A, 1), v(TipoRol.B, k), v(TipoRol.C, 1), v(TipoRol.D, k)}
        if miembro.family == Familia.F:
            return {v(TipoRol.B, k), v(TipoRol.D, k)}
        return set()

    def test_borrar_un_vertice_baja_gamma(self):
        miembros = ([gen_G(k) for k in range(1, K_BORRADO + 1)]
                    + [gen_H(k) for k in range(2, K_BORRADO + 1)]
                    + [gen_F(k) for k in range(1, K_BORRADO + 1)]
                    + [gen_L(k) for k in range(1, K_BORRADO + 1)])
        if LARGOS:
            miembros.append(gen_GP16())
        for miembro in miembros:
            G = miembro.graph
            g = gamma_t(G).value
            excepciones = self._excepciones(miembro)
            for v in range(G.n):
                with self.subTest(miembro=miembro.nombre, v=v):
                    if v in excepciones:
                        self.assertLess(gamma_t_almost(G, v).value, g)
                    else:
                        self.assertLess(gamma_sin(G, v), g)

    def test_c3_es_la_excepcion_de_f0(self):
        C3 = gen_F(0).graph
        self.assertEqual(gamma_sin(C3, 0), 2)
        self.assertEqual(gamma_t_almost(C3, 0).value, 1)

import random

import networkx as nx
from django.test import SimpleTestCase

from .canonico import are_isomorphic, canonical_form, canonical_relabel, es_isomorfismo, find_isomorphism
from .graph6 import Graph6Error, graph6_decode, graph6_encode, read_graph6_lines
from .grafo import (
    Graph, GrafoInvalido, VertexSet, components, contract, delete_vertices, dominates, from_edges, induce,
    is_connected, relabel, totally_dominates, vecindad, vecindad_cerrada,
)


def desde_networkx(H):
    H = nx.convert_node_labels_to_integers(H)
    return from_edges(H.number_of_nodes(), H.edges())


def atlas(max_n=7):
    """Todos los grafos de hasta 7 vértices, uno por clase de isomorfismo."""
    return [H for H in nx.graph_atlas_g() if 1 <= H.number_of_nodes() <= max_n]


class GrafoTests(SimpleTestCase):

    def test_from_edges_colapsa_repetidas(self):
        G = from_edges(3, [(0, 1), (1, 0), (1, 2)])
        self.assertEqual(G.m, 2)
        self.assertEqual(G.degrees, [1, 2, 1])

    def test_rechaza_lazos_y_extremos_fuera_de_rango(self):
        with self.assertRaises(GrafoInvalido):
            from_edges(3, [(1, 1)])
        with self.assertRaises(GrafoInvalido):
            from_edges(3, [(0, 3)])
        with self.assertRaises(GrafoInvalido):
            from_edges(129, [])

    def test_rechaza_adyacencia_no_simetrica(self):
        with self.assertRaises(GrafoInvalido):
            Graph(2, (0b10, 0))

    def test_vertex_set(self):
        S = VertexSet.from_iterable([3, 0], 4)
        self.assertEqual(S.members, (0, 3))
        self.assertEqual(len(S), 2)
        self.assertIn(3, S)
        self.assertNotIn(1, S)
        with self.assertRaises(GrafoInvalido):
            VertexSet.from_iterable([4], 4)

    def test_delete_vertices_reetiqueta_en_orden(self):
        G = from_edges(4, [(0, 1), (1, 2), (2, 3)])
        H, mapa = delete_vertices(G, [1])
        self.assertEqual(mapa, {0: 0, 2: 1, 3: 2})
        self.assertEqual(H.edges(), [(1, 2)])

    def test_induce(self):
        G = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        H, mapa = induce(G, [1, 2, 3])
        self.assertEqual(mapa, {1: 0, 2: 1, 3: 2})
        self.assertEqual(H.edges(), [(0, 1), (1, 2)])

    def test_contract_une_vecindades(self):
        # P_3: 0-1-2, contraer los extremos deja K_2
        G = from_edges(3, [(0, 1), (1, 2)])
        H, mapa = contract(G, 0, 2)
        self.assertEqual(H.n, 2)
        self.assertEqual(H.edges(), [(0, 1)])
        self.assertEqual(mapa, {0: 0, 1: 1, 2: 0})

    def test_contract_vertices_adyacentes_no_deja_lazo(self):
        G = from_edges(3, [(0, 1), (1, 2), (0, 2)])
        H, mapa = contract(G, 2, 1)
        self.assertEqual(H.n, 2)
        self.assertEqual(H.edges(), [(0, 1)])
        self.assertEqual(mapa[2], mapa[1])
        with self.assertRaises(GrafoInvalido):
            contract(G, 1, 1)

    def test_vecindades_y_dominacion(self):
        G = from_edges(4, [(0, 1), (1, 2), (2, 3)])
        self.assertEqual(vecindad(G, [1]).members, (0, 2))
        self.assertEqual(vecindad_cerrada(G, [1]).members, (0, 1, 2))
        self.assertTrue(totally_dominates(G, [1, 2], [0, 1, 2, 3]))
        self.assertFalse(totally_dominates(G, [1], [1]))
        self.assertTrue(dominates(G, [1], [0, 1, 2]))

    def test_componentes(self):
        G = from_edges(5, [(3, 4), (0, 2)])
        self.assertEqual([c.members for c in components(G)], [(0, 2), (1,), (3, 4)])
        self.assertFalse(is_connected(G))
        with self.assertRaises(GrafoInvalido):
            is_connected(Graph(0, ()))

    def test_componentes_contra_networkx(self):
        rng = random.Random(7)
        for _ in range(50):
            H = nx.gnp_random_graph(12, 0.15, seed=rng.randrange(10 ** 6))
            G = desde_networkx(H)
            esperado = sorted(tuple(sorted(c)) for c in nx.connected_components(H))
            self.assertEqual(sorted(c.members for c in components(G)), esperado)


class Graph6Tests(SimpleTestCase):

    def test_bw_es_triangulo(self):
        G = graph6_decode("Bw")
        self.assertEqual(G.n, 3)
        self.assertEqual(G.edges(), [(0, 1), (0, 2), (1, 2)])

    def test_bg_es_camino(self):
        self.assertEqual(graph6_decode("Bg").edges(), [(0, 1), (1, 2)])
        self.assertEqual(graph6_encode(from_edges(3, [(0, 1), (1, 2)])), b"Bg")

    def test_cabecera_opcional(self):
        self.assertEqual(graph6_decode(">>graph6<<Bw\n").m, 3)

    def test_orden_cero_y_uno(self):
        self.assertEqual(graph6_decode("?").n, 0)
        self.assertEqual(graph6_encode(from_edges(1, [])), b"@")

    def test_coincide_con_networkx(self):
        for H in atlas():
            G = desde_networkx(H)
            nuestro = graph6_encode(G)
            self.assertEqual(nuestro, nx.to_graph6_bytes(nx.convert_node_labels_to_integers(H), header=False).strip())
            self.assertEqual(sorted(nx.from_graph6_bytes(nuestro).edges()), G.edges())
            self.assertEqual(graph6_decode(nuestro), G)

    def test_errores_con_offset(self):
        casos = {
            "": 0,
            "B": 1,
            "Bw?": 2,
            "Bx": 1,
            "B\x01": 1,
            "~??~": 0,
            ">>graph6<<B": 11,
        }
        for texto, offset in casos.items():
            with self.subTest(texto=texto):
                with self.assertRaises(Graph6Error) as ctx:
                    graph6_decode(texto)
                self.assertEqual(ctx.exception.offset, offset)

    def test_lectura_por_lineas(self):
        lineas = ["Bw\n", "\n", "Bx\n", ">>graph6<<\n", b"Bg"]
        leidas = list(read_graph6_lines(lineas))
        self.assertEqual([l.numero for l in leidas], [1, 2, 3, 4, 5])
        self.assertEqual(leidas[0].grafo.m, 3)
        self.assertTrue(leidas[1].omitida)
        self.assertEqual(leidas[2].error.linea, 3)
        self.assertIn("línea 3", str(leidas[2].error))
        self.assertTrue(leidas[3].omitida)
        self.assertEqual(leidas[4].grafo.m, 2)


class CanonicoTests(SimpleTestCase):

    def test_formas_distintas_para_clases_distintas(self):
        grafos = [desde_networkx(H) for H in atlas()]
        formas = {canonical_form(G) for G in grafos}
        self.assertEqual(len(formas), len(grafos))

    def test_invariante_por_permutacion(self):
        rng = random.Random(11)
        for H in atlas()[::7]:
            G = desde_networkx(H)
            perm = rng.sample(range(G.n), G.n)
            P = relabel(G, perm)
            self.assertEqual(canonical_form(G), canonical_form(P))
            self.assertEqual(canonical_relabel(G), canonical_relabel(P))
            mapa = find_isomorphism(G, P)
            self.assertIsNotNone(mapa)
            self.assertTrue(es_isomorfismo(G, P, mapa))

    def test_grafos_regulares_aleatorios_contra_networkx(self):
        rng = random.Random(3)
        for _ in range(30):
            H1 = nx.random_regular_graph(3, 12, seed=rng.randrange(10 ** 6))
            H2 = nx.random_regular_graph(3, 12, seed=rng.randrange(10 ** 6))
            self.assertEqual(are_isomorphic(desde_networkx(H1), desde_networkx(H2)), nx.is_isomorphic(H1, H2))

    def test_no_isomorfos(self):
        C6 = from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        dos_triangulos = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        self.assertFalse(are_isomorphic(C6, dos_triangulos))
        self.assertIsNone(find_isomorphism(C6, dos_triangulos))

    def test_moebius_kantor_transitivo(self):
        G = desde_networkx(nx.moebius_kantor_graph())
        rng = random.Random(5)
        for _ in range(5):
            P = relabel(G, rng.sample(range(16), 16))
            self.assertTrue(are_isomorphic(G, P))

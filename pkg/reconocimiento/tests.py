import random

import networkx as nx
from django.test import SimpleTestCase

from dominacion.solver import gamma_t
from familias.generadores import (
    TipoRol, gen_complete, gen_corona_cycle, gen_cycle, gen_F, gen_G, gen_generalized_petersen, gen_GP16, gen_H,
    gen_L, gen_path, gen_star, two_corona,
)
from grafos.canonico import are_isomorphic, es_isomorfismo
from grafos.grafo import Graph, from_edges, relabel
from grafos.graph6 import graph6_decode, graph6_encode

from .clasificacion import (
    NINGUNA, CaminoNoEspecial, Classification, CotaNoAplicable, InconsistenciaInterna, SpecialTwoPath, Veredicto,
    check_bound, classify, degree_two_subgraph, effective_delta, find_special_two_paths, find_two_paths,
    is_in_Gcub, is_in_Gdone, is_in_Gdtwo, reduce_special, theorem_b_d_applies,
)


def union_disjunta(*grafos):
    aristas, base = [], 0
    for G in grafos:
        aristas += [(u + base, v + base) for u, v in G.edges()]
        base += G.n
    return from_edges(base, aristas)


def miembros_pequenos():
    return ([gen_G(k) for k in (1, 2, 3)] + [gen_H(k) for k in (2, 3)] + [gen_F(k) for k in (0, 1, 2)]
            + [gen_L(k) for k in (0, 1, 2)] + [gen_corona_cycle(j) for j in (3, 4, 5)] + [gen_GP16()])


VEREDICTO_ESPERADO = {
    "G": Veredicto.GCUB_G, "H": Veredicto.GCUB_H, "GP16": Veredicto.GCUB_GP16,
    "F": Veredicto.GDTWO_F, "L": Veredicto.GDTWO_L, "Corona": Veredicto.GDONE,
}


class CotaTests(SimpleTestCase):

    def test_effective_delta(self):
        self.assertEqual(effective_delta(gen_path(3)), 3)
        self.assertEqual(effective_delta(gen_cycle(5)), 3)
        self.assertEqual(effective_delta(gen_complete(4)), 3)
        self.assertEqual(effective_delta(gen_complete(5)), 4)
        with self.assertRaises(CotaNoAplicable):
            effective_delta(gen_complete(2))

    def test_p3_no_extremal(self):
        informe = check_bound(graph6_decode("Bg"))
        self.assertEqual((informe.effective_delta, informe.gamma_t, informe.bound), (3, 2, 3))
        self.assertFalse(informe.is_extremal)
        self.assertEqual(informe.classification, NINGUNA)
        self.assertTrue(informe.coherente)

    def test_c6_extremal(self):
        informe = check_bound(gen_cycle(6))
        self.assertTrue(informe.is_extremal)
        self.assertEqual(str(informe.classification), "GdtwoL(0)")

    def test_k4_extremal(self):
        informe = check_bound(gen_complete(4))
        self.assertEqual(informe.bound, 6)
        self.assertTrue(informe.is_extremal)
        self.assertEqual(informe.classification, Classification(Veredicto.GCUB_G, 1))

    def test_estrella_no_extremal(self):
        informe = check_bound(gen_star(3))
        self.assertEqual((informe.m, informe.bound), (3, 6))
        self.assertFalse(informe.is_extremal)

    def test_k5(self):
        informe = check_bound(gen_complete(5))
        self.assertEqual((informe.effective_delta, informe.bound), (4, 12))
        self.assertFalse(informe.classification.in_families)

    def test_orden_de_claves(self):
        datos = check_bound(gen_complete(4)).to_dict()
        self.assertEqual(
            list(datos),
            ["n", "m", "max_degree", "effective_delta", "gamma_t", "bound", "extremal", "classification"],
        )
        self.assertEqual(datos["classification"], {"family": "GcubG", "k": 1})

    def test_componentes_pequenas(self):
        for G in (gen_complete(2), union_disjunta(gen_path(3), gen_complete(2)), from_edges(1, []), Graph(0, ())):
            with self.assertRaises(CotaNoAplicable):
                check_bound(G)

    def test_no_conexo(self):
        informe = check_bound(union_disjunta(gen_complete(4), gen_complete(4)))
        self.assertTrue(informe.is_extremal)
        self.assertFalse(informe.conexo)
        self.assertFalse(informe.classification.in_families)
        self.assertIn("conexo", informe.classification.nota)
        self.assertTrue(informe.coherente)

    def test_gamma_falso_es_violacion(self):
        with self.assertRaises(InconsistenciaInterna):
            check_bound(gen_complete(4), gamma=3)

    def test_familias_son_extremales(self):
        for miembro in miembros_pequenos():
            with self.subTest(miembro=miembro.nombre):
                informe = check_bound(miembro.graph)
                self.assertTrue(informe.is_extremal)
                self.assertEqual(informe.classification.verdict, VEREDICTO_ESPERADO[str(miembro.family)])


class DosCaminosTests(SimpleTestCase):

    def test_f1_tiene_un_camino_especial(self):
        miembro = gen_F(1)
        (p,) = find_special_two_paths(miembro.graph)
        self.assertEqual(p.camino, (0, 4, 5, 6, 2))
        self.assertEqual((p.x, p.y), (1, 3))
        self.assertEqual(p.internos, tuple(miembro.roles.of_type(TipoRol.SUBDIV_V)))
        self.assertEqual(find_two_paths(miembro.graph), [(0, 4, 5, 6, 2)])

    def test_l_tiene_dos(self):
        for k in (1, 2, 3):
            G = gen_L(k).graph
            self.assertEqual(len(find_two_paths(G)), 2)
            self.assertEqual(len(find_special_two_paths(G)), 2)

    def test_cubicos_sin_caminos(self):
        self.assertEqual(find_two_paths(gen_G(3).graph), [])
        self.assertEqual(find_special_two_paths(gen_GP16().graph), [])

    def test_dos_camino_corto(self):
        # K_4 con la arista 01 subdividida una vez
        G = from_edges(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)])
        self.assertEqual(find_two_paths(G), [(0, 4, 1)])
        self.assertEqual(find_special_two_paths(G), [])

    def test_ciclo_sin_extremos(self):
        self.assertEqual(find_two_paths(gen_cycle(7)), [])

    def test_reduce_f1_a_triangulo(self):
        G = gen_F(1).graph
        (p,) = find_special_two_paths(G)
        reducido, mapa = reduce_special(G, p)
        self.assertTrue(are_isomorphic(reducido, gen_cycle(3)))
        self.assertEqual(mapa[0], mapa[2])
        self.assertEqual(set(mapa), {0, 1, 2, 3})

    def test_reduce_f2_a_f1(self):
        G = gen_F(2).graph
        (p,) = find_special_two_paths(G)
        reducido, _ = reduce_special(G, p)
        self.assertEqual(reducido.n, 7)
        self.assertTrue(are_isomorphic(reducido, gen_F(1).graph))

    def test_reduce_rechaza_caminos_ajenos(self):
        (p,) = find_special_two_paths(gen_F(1).graph)
        with self.assertRaises(CaminoNoEspecial):
            reduce_special(gen_G(2).graph, p)
        with self.assertRaises(CaminoNoEspecial):
            reduce_special(gen_F(1).graph, SpecialTwoPath(0, 4, 5, 6, 2, 1, 2))
        with self.assertRaises(CaminoNoEspecial):
            reduce_special(gen_complete(3), p)

    def test_subgrafo_de_grado_dos(self):
        F, mapa = degree_two_subgraph(gen_F(1).graph)
        self.assertEqual(mapa, {4: 0, 5: 1, 6: 2})
        self.assertEqual(F.edges(), [(0, 1), (1, 2)])
        self.assertFalse(theorem_b_d_applies(gen_F(1).graph))
        self.assertTrue(theorem_b_d_applies(gen_complete(4)))
        self.assertFalse(theorem_b_d_applies(gen_cycle(4)))
        self.assertFalse(theorem_b_d_applies(gen_path(4)))
        # K_4 con la arista 01 subdividida dos veces
        G = from_edges(6, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 1)])
        self.assertTrue(theorem_b_d_applies(G))


class FamiliasTests(SimpleTestCase):

    def test_gdone(self):
        resultado = is_in_Gdone(gen_corona_cycle(4).graph)
        self.assertEqual(resultado, Classification(Veredicto.GDONE, 4))
        self.assertTrue(es_isomorfismo(gen_corona_cycle(4).graph, gen_corona_cycle(4).graph, resultado.witness))
        # la 2-corona de un camino no tiene ciclo de hubs
        self.assertEqual(is_in_Gdone(two_corona(gen_path(4)).graph), NINGUNA)
        self.assertEqual(is_in_Gdone(two_corona(gen_complete(4)).graph), NINGUNA)
        self.assertEqual(is_in_Gdone(gen_cycle(9)), NINGUNA)

    def test_gdtwo(self):
        self.assertEqual(is_in_Gdtwo(gen_cycle(3)), Classification(Veredicto.GDTWO_F, 0))
        self.assertEqual(is_in_Gdtwo(gen_cycle(6)), Classification(Veredicto.GDTWO_L, 0))
        self.assertEqual(is_in_Gdtwo(gen_F(2).graph), Classification(Veredicto.GDTWO_F, 2))
        self.assertEqual(is_in_Gdtwo(gen_L(2).graph), Classification(Veredicto.GDTWO_L, 2))
        for n in (4, 5, 7, 10):
            self.assertEqual(is_in_Gdtwo(gen_cycle(n)), NINGUNA)
        self.assertEqual(is_in_Gdtwo(gen_G(2).graph), NINGUNA)

    def test_gdtwo_rechaza_subdivision_equivocada(self):
        # G_2 con la arista b_1 c_1 subdividida tres veces
        G = gen_G(2).graph
        aristas = [e for e in G.edges() if e != (2, 4)]
        aristas += [(2, 8), (8, 9), (9, 10), (10, 4)]
        H = from_edges(11, aristas)
        self.assertEqual(is_in_Gdtwo(H).in_families, are_isomorphic(H, gen_F(2).graph))

    def test_gcub(self):
        self.assertEqual(is_in_Gcub(gen_G(3).graph), Classification(Veredicto.GCUB_G, 3))
        self.assertEqual(is_in_Gcub(gen_H(3).graph), Classification(Veredicto.GCUB_H, 3))
        self.assertEqual(is_in_Gcub(gen_GP16().graph), Classification(Veredicto.GCUB_GP16))
        self.assertEqual(str(is_in_Gcub(gen_GP16().graph)), "GcubGP16")
        self.assertEqual(is_in_Gcub(gen_generalized_petersen(5, 2)), NINGUNA)
        self.assertEqual(is_in_Gcub(gen_complete(5)), NINGUNA)
        self.assertEqual(is_in_Gcub(gen_cycle(4)), NINGUNA)

    def test_gcub_gamma_incoherente(self):
        with self.assertRaises(InconsistenciaInterna):
            is_in_Gcub(gen_complete(4), gamma=3)
        with self.assertRaises(InconsistenciaInterna):
            is_in_Gcub(gen_complete(6), gamma=3)

    def test_classify_ejemplos(self):
        casos = {
            "Bw": "GdtwoF(0)",
            "Bg": "NotInFamilies",
            "C~": "GcubG(1)",
        }
        for texto, esperado in casos.items():
            self.assertEqual(str(classify(graph6_decode(texto))), esperado)
        self.assertEqual(str(classify(gen_F(1).graph)), "GdtwoF(1)")
        self.assertEqual(str(classify(gen_L(1).graph)), "GdtwoL(1)")
        self.assertEqual(str(classify(gen_corona_cycle(3).graph)), "Gdone(3)")
        self.assertEqual(str(classify(gen_H(2).graph)), "GcubH(2)")
        self.assertEqual(classify(gen_generalized_petersen(5, 2)), NINGUNA)

    def test_classify_no_conexo(self):
        resultado = classify(union_disjunta(gen_complete(4), gen_complete(4)))
        self.assertEqual(resultado, NINGUNA)
        self.assertTrue(resultado.nota)

    def test_ida_y_vuelta_por_graph6(self):
        for miembro in miembros_pequenos():
            with self.subTest(miembro=miembro.nombre):
                G = graph6_decode(graph6_encode(miembro.graph))
                resultado = classify(G)
                self.assertEqual(resultado.verdict, VEREDICTO_ESPERADO[str(miembro.family)])
                esperado_k = None if resultado.verdict == Veredicto.GCUB_GP16 else miembro.k
                self.assertEqual(resultado.k, esperado_k)
                self.assertEqual(resultado.to_dict(), {"family": str(resultado.verdict), "k": esperado_k})

    def test_invariante_por_permutacion(self):
        rng = random.Random(13)
        for miembro in miembros_pequenos():
            G = miembro.graph
            P = relabel(G, rng.sample(range(G.n), G.n))
            original, permutado = classify(G), classify(P)
            self.assertEqual(original, permutado)
            self.assertTrue(es_isomorfismo(P, miembro.graph, permutado.witness))

    def test_familias_disjuntas(self):
        for miembro in miembros_pequenos():
            G = miembro.graph
            aceptan = [p(G).in_families for p in (is_in_Gdone, is_in_Gdtwo, is_in_Gcub)]
            self.assertEqual(aceptan.count(True), 1, miembro.nombre)


class CaracterizacionCubicaTests(SimpleTestCase):
    """Conexos con δ >= 3: γ_t = n/2 exactamente en la familia cúbica."""

    def test_atlas_hasta_7(self):
        for H in nx.graph_atlas_g():
            if not 4 <= H.number_of_nodes() <= 7 or not nx.is_connected(H):
                continue
            G = from_edges(H.number_of_nodes(), H.edges())
            if G.min_degree < 3:
                continue
            g = gamma_t(G).value
            self.assertEqual(2 * g == G.n, is_in_Gcub(G, gamma=g).in_families)

    def test_cubicos_aleatorios(self):
        rng = random.Random(21)
        for _ in range(20):
            H = nx.random_regular_graph(3, 12, seed=rng.randrange(10 ** 6))
            if not nx.is_connected(H):
                continue
            G = from_edges(12, H.edges())
            self.assertEqual(2 * gamma_t(G).value == 12, is_in_Gcub(G).in_families)

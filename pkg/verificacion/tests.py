import dataclasses
import json
import os
import tempfile
import unittest
from io import StringIO
from unittest import mock

import networkx as nx
from django.contrib.auth.models import User
from django.core.exceptions import ImproperlyConfigured, ValidationError
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings
from django.urls import reverse

from Dominacionproject.settings import entero_env
from familias.generadores import gen_complete, gen_cycle, gen_F, gen_G, gen_H
from grafos.canonico import canonical_form, canonical_relabel
from grafos.graph6 import graph6_decode, graph6_encode, read_graph6_lines
from grafos.grafo import from_edges, is_connected
from reconocimiento.clasificacion import NINGUNA, check_bound

from .censo import verify_enumerated, verify_theorem
from .comandos import SALIDA_USO, SALIDA_VIOLACION
from .enumeracion import EnumeracionRechazada, enumerate_connected
from .extremalidad import verify_families
from .models import CensoTeorema, GrafoExtremal
from .reportes import censo_csv

LARGOS = os.getenv('DOMINACION_TESTS_LARGOS') == '1'


def g6_canonico(G):
    return graph6_encode(canonical_relabel(G)).decode('ascii')


def ejecutar(*args, stdin=None, **opciones):
    out, err = StringIO(), StringIO()
    if stdin is not None:
        opciones['stdin'] = StringIO(stdin)
    call_command(*args, stdout=out, stderr=err, **opciones)
    return out.getvalue(), err.getvalue()


def check_bound_sin_familias(G, gamma=None):
    """check_bound con la clasificación anulada, para forzar violaciones."""
    return dataclasses.replace(check_bound(G, gamma=gamma), classification=NINGUNA)


class EnumeracionTests(SimpleTestCase):

    def test_conteos_hasta_7(self):
        conteos = [len(list(enumerate_connected(n))) for n in range(1, 8)]
        self.assertEqual(conteos, [1, 1, 2, 6, 21, 112, 853])

    def test_conexos_distintos_y_canonicos(self):
        grafos = list(enumerate_connected(6))
        formas = [canonical_form(G) for G in grafos]
        self.assertEqual(len(set(formas)), len(grafos))
        self.assertEqual(formas, sorted(formas))
        for G in grafos:
            self.assertTrue(is_connected(G))
            self.assertEqual(canonical_relabel(G), G)

    def test_coincide_con_el_atlas(self):
        atlas = {g6_canonico(from_edges(5, H.edges()))
                 for H in nx.graph_atlas_g() if H.number_of_nodes() == 5 and nx.is_connected(H)}
        self.assertEqual({g6_canonico(G) for G in enumerate_connected(5)}, atlas)

    def test_rechaza_ordenes_fuera_de_rango(self):
        for n in (0, 9):
            with self.assertRaises(EnumeracionRechazada):
                enumerate_connected(n)
        with self.assertRaises(EnumeracionRechazada):
            enumerate_connected(5, max_n=4)
        with self.assertRaises(EnumeracionRechazada):
            enumerate_connected(9, max_n=12)

    def test_limite_de_enumeracion_en_el_entorno(self):
        with mock.patch.dict(os.environ, {'VERIFICACION_ENUM_MAX_N': '9'}):
            with self.assertRaises(ImproperlyConfigured):
                entero_env('VERIFICACION_ENUM_MAX_N', 8, maximo=8)
        with mock.patch.dict(os.environ, {'VERIFICACION_ENUM_MAX_N': '6'}):
            self.assertEqual(entero_env('VERIFICACION_ENUM_MAX_N', 8, maximo=8), 6)

    @unittest.skipUnless(LARGOS, "DOMINACION_TESTS_LARGOS=1 para n = 8")
    def test_conteo_8(self):
        self.assertEqual(sum(1 for _ in enumerate_connected(8)), 11117)


class CensoTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.resumen = verify_enumerated(7)

    def test_sin_violaciones(self):
        self.assertTrue(self.resumen.ok)
        self.assertEqual(self.resumen.violaciones, [])

    def test_conteos_por_orden(self):
        self.assertEqual(self.resumen.por_orden, {3: 2, 4: 6, 5: 21, 6: 112, 7: 853})
        self.assertEqual(self.resumen.verificados, 994)
        self.assertEqual(self.resumen.omitidos, 0)

    def test_extremales_hasta_7(self):
        esperados = {g6_canonico(G) for G in (gen_cycle(3), gen_complete(4), gen_cycle(6), gen_F(1).graph)}
        self.assertEqual({g.graph6 for g in self.resumen.extremales}, esperados)
        familias = {(g.n, g.familia, g.k) for g in self.resumen.extremales}
        self.assertEqual(familias, {(3, "GdtwoF", 0), (4, "GcubG", 1), (6, "GdtwoL", 0), (7, "GdtwoF", 1)})

    def test_extremales_ordenados_por_graph6_canonico(self):
        graph6s = [g.graph6 for g in self.resumen.extremales]
        self.assertEqual(graph6s, sorted(graph6s))

    def test_mismo_resultado_con_varios_workers(self):
        uno = verify_enumerated(6, jobs=1)
        dos = verify_enumerated(6, jobs=2)
        self.assertEqual(uno.to_dict(incluir_tiempo=False), dos.to_dict(incluir_tiempo=False))

    def test_censo_csv(self):
        lineas = censo_csv(self.resumen).splitlines()
        self.assertEqual(lineas[0], "graph6,n,m,gamma_t,family,k")
        self.assertEqual(len(lineas), 5)

    @unittest.skipUnless(LARGOS, "DOMINACION_TESTS_LARGOS=1 para n = 8")
    def test_extremales_de_orden_8(self):
        resumen = verify_enumerated(8, min_n=8, jobs=2)
        self.assertTrue(resumen.ok)
        self.assertEqual(resumen.por_orden, {8: 11117})
        self.assertEqual({g.graph6 for g in resumen.extremales},
                         {g6_canonico(gen_G(2).graph), g6_canonico(gen_H(2).graph)})


class FlujoGraph6Tests(SimpleTestCase):

    LINEAS = ["Bw\n", "\n", "Bx\n", ">>graph6<<\n", "Bg\n", "A_\n", "C~\n", "Bw\n"]

    def test_contabilidad_por_linea(self):
        resumen = verify_theorem(read_graph6_lines(self.LINEAS), nombre="prueba")
        self.assertEqual(resumen.lineas, len(self.LINEAS))
        self.assertEqual((resumen.verificados, resumen.omitidos, len(resumen.errores)), (4, 3, 1))
        self.assertEqual(resumen.errores[0].linea, 3)
        self.assertEqual(resumen.errores[0].offset, 1)
        self.assertEqual(resumen.por_orden, {3: 3, 4: 1})
        self.assertEqual(len(resumen.extremales), 2)
        self.assertTrue(resumen.ok)

    def test_idempotente(self):
        primero = verify_theorem(read_graph6_lines(self.LINEAS), nombre="prueba")
        segundo = verify_theorem(read_graph6_lines(self.LINEAS), nombre="prueba")
        self.assertEqual(primero.to_dict(False), segundo.to_dict(False))
        reentrada = verify_theorem(read_graph6_lines([g.graph6 for g in primero.extremales]))
        self.assertEqual([g.graph6 for g in reentrada.extremales], [g.graph6 for g in primero.extremales])

    def test_no_conexos_se_omiten(self):
        dos_triangulos = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        resumen = verify_theorem([dos_triangulos, gen_cycle(6)])
        self.assertEqual((resumen.verificados, resumen.omitidos), (1, 1))

    def test_violacion_detectada(self):
        with mock.patch('verificacion.censo.check_bound', side_effect=check_bound_sin_familias):
            resumen = verify_theorem([gen_complete(4), gen_cycle(5)])
        self.assertFalse(resumen.ok)
        self.assertEqual([v.graph6 for v in resumen.violaciones], ["C~"])


class FamiliasVerificacionTests(SimpleTestCase):

    def test_familias_pequenas(self):
        filas = verify_families(3)
        self.assertTrue(all(f.ok for f in filas))
        nombres = [f.nombre for f in filas]
        self.assertEqual(nombres[:3], ["G_1", "G_2", "G_3"])
        self.assertEqual(nombres[-1], "GP16")
        self.assertIn("Corona_5", nombres)

    @unittest.skipUnless(LARGOS, "DOMINACION_TESTS_LARGOS=1 para k <= 6")
    def test_familias_hasta_6(self):
        self.assertTrue(all(f.ok for f in verify_families(6)))


class ComandosTests(TestCase):

    def assertSalida(self, codigo, *args, **opciones):
        with self.assertRaises(CommandError) as ctx:
            ejecutar(*args, **opciones)
        self.assertEqual(ctx.exception.returncode, codigo)
        return ctx.exception

    def test_gamma_t(self):
        out, _ = ejecutar('gamma_t', g6='Bw')
        self.assertEqual(out, "2 [0, 1]\n")
        out, _ = ejecutar('gamma_t', stdin="Bw\nBg\n")
        self.assertEqual(out.splitlines(), ["2 [0, 1]", "2 [0, 1]"])
        out, _ = ejecutar('gamma_t', g6='C~', oracle=True, json=True)
        self.assertEqual(json.loads(out), {"gamma_t": 2, "witness": [0, 1]})

    def test_gamma_t_errores(self):
        self.assertSalida(SALIDA_USO, 'gamma_t', g6='Bx')
        self.assertSalida(SALIDA_USO, 'gamma_t', g6='B?')
        self.assertSalida(SALIDA_USO, 'gamma_t', stdin="")
        self.assertSalida(SALIDA_USO, 'gamma_t', stdin="Bw\nB\x7f\n")

    def test_atd(self):
        out, _ = ejecutar('atd', g6='C~', vertex=0)
        self.assertEqual(out, "1 [0]\n")
        out, _ = ejecutar('atd', g6=graph6_encode(gen_cycle(6)).decode(), vertex=0, json=True)
        self.assertEqual(json.loads(out), {"vertex": 0, "gamma_t_a": 3, "witness": [0, 2, 3]})
        self.assertSalida(SALIDA_USO, 'atd', g6='Bg', vertex=0)
        self.assertSalida(SALIDA_USO, 'atd', g6='Bw', vertex=7)

    def test_classify(self):
        out, _ = ejecutar('classify', stdin="Bw\nC~\nBg\n")
        self.assertEqual(out.splitlines(), ["GdtwoF(0)", "GcubG(1)", "NotInFamilies"])
        dos_k4 = from_edges(8, [(u + b, v + b) for b in (0, 4) for u, v in gen_complete(4).edges()])
        out, _ = ejecutar('classify', g6=graph6_encode(dos_k4).decode(), json=True)
        datos = json.loads(out)
        self.assertEqual((datos["family"], datos["k"]), ("NotInFamilies", None))
        self.assertIn("note", datos)

    def test_check_bound(self):
        out, _ = ejecutar('check_bound', g6='C~')
        datos = json.loads(out)
        self.assertEqual(datos["bound"], 6)
        self.assertTrue(datos["extremal"])
        self.assertEqual(datos["classification"], {"family": "GcubG", "k": 1})
        out, _ = ejecutar('check_bound', stdin="Bw\nBg\n", csv=True)
        lineas = out.splitlines()
        self.assertEqual(lineas[0], "n,m,max_degree,effective_delta,gamma_t,bound,extremal,family,k")
        self.assertEqual(len(lineas), 3)
        self.assertSalida(SALIDA_USO, 'check_bound', g6='A_')

    def test_check_bound_violacion(self):
        with mock.patch('verificacion.management.commands.check_bound.check_bound',
                        side_effect=check_bound_sin_familias):
            self.assertSalida(SALIDA_VIOLACION, 'check_bound', g6='C~')

    def test_generate_family(self):
        out, _ = ejecutar('generate_family', family='F', k=1, format='edgelist')
        lineas = out.splitlines()
        self.assertEqual(lineas[0], "7 9")
        self.assertEqual(len(lineas), 10)
        out, _ = ejecutar('generate_family', family='GP16')
        G = graph6_decode(out.strip())
        self.assertEqual((G.n, G.m), (16, 24))
        out, _ = ejecutar('generate_family', family='corona-cycle', k=3, roles=True)
        self.assertIn("# 0 Hub(1)", out.splitlines())
        self.assertSalida(SALIDA_USO, 'generate_family', family='G')
        self.assertSalida(SALIDA_USO, 'generate_family', family='H', k=1)

    def test_enumerate_graphs(self):
        out, _ = ejecutar('enumerate_graphs', n=4, count=True)
        self.assertEqual(out, "6\n")
        out, _ = ejecutar('enumerate_graphs', n=3)
        self.assertEqual(sorted(out.split()), sorted([g6_canonico(gen_cycle(3)), g6_canonico(from_edges(3, [(0, 1), (1, 2)]))]))
        self.assertSalida(SALIDA_USO, 'enumerate_graphs', n=9)

    def test_verify_theorem_enumerado(self):
        out, _ = ejecutar('verify_theorem', max_n=5, json=True)
        datos = json.loads(out)
        self.assertTrue(datos["ok"])
        self.assertEqual(datos["por_orden"], {"3": 2, "4": 6, "5": 21})
        self.assertEqual(len(datos["extremales"]), 2)
        out, _ = ejecutar('verify_theorem', max_n=4)
        self.assertIn("Extremales: 2", out)

    def test_verify_theorem_stdin(self):
        out, _ = ejecutar('verify_theorem', input='-', stdin="Bw\nC~\n", csv=True)
        self.assertEqual(out.splitlines()[0], "graph6,n,m,gamma_t,family,k")
        error = self.assertSalida(SALIDA_USO, 'verify_theorem', input='-', stdin="Bw\nBx\n")
        self.assertIn("inválidas", str(error))

    def test_verify_theorem_archivo(self):
        with tempfile.NamedTemporaryFile('w', suffix='.g6', delete=False) as archivo:
            archivo.write(">>graph6<<\nBw\nC~\n")
        self.addCleanup(os.remove, archivo.name)
        out, _ = ejecutar('verify_theorem', input=archivo.name, json=True)
        datos = json.loads(out)
        self.assertEqual((datos["lineas"], datos["verificados"], datos["omitidos"]), (3, 2, 1))
        self.assertSalida(SALIDA_USO, 'verify_theorem', input=archivo.name + '.no-existe')

    def test_verify_theorem_uso(self):
        with self.assertRaises(CommandError):
            ejecutar('verify_theorem')
        self.assertSalida(SALIDA_USO, 'verify_theorem', max_n=9)
        self.assertSalida(SALIDA_USO, 'verify_theorem', max_n=4, jobs=0)
        with override_settings(VERIFICACION_ENUM_MAX_N=12):
            self.assertSalida(SALIDA_USO, 'verify_theorem', max_n=9)
            self.assertSalida(SALIDA_USO, 'enumerate_graphs', n=9)

    def test_verify_theorem_violacion(self):
        with mock.patch('verificacion.censo.check_bound', side_effect=check_bound_sin_familias):
            error = self.assertSalida(SALIDA_VIOLACION, 'verify_theorem', input='-', stdin="C~\n")
        self.assertIn("C~", str(error))

    def test_verify_theorem_guarda(self):
        _, err = ejecutar('verify_theorem', max_n=4, save=True)
        censo = CensoTeorema.objects.get()
        self.assertIn(f"id {censo.pk}", err)
        self.assertEqual(censo.por_orden, {"3": 2, "4": 6})
        self.assertEqual((censo.verificados, censo.lineas), (8, 8))
        self.assertTrue(censo.ok)
        self.assertEqual(sorted(censo.extremales.values_list('familia', flat=True)), ["GcubG", "GdtwoF"])

    def test_verify_families(self):
        out, _ = ejecutar('verify_families', max_k=2, json=True)
        filas = json.loads(out)
        self.assertTrue(all(f["ok"] for f in filas))
        self.assertEqual(filas[0]["member"], "G_1")
        out, _ = ejecutar('verify_families', max_k=2, csv=True)
        self.assertEqual(out.splitlines()[0], "member,n,m,gamma_t,expected_gamma_t,extremal,ok")
        self.assertSalida(SALIDA_USO, 'verify_families', max_k=1)


class ModelosTests(TestCase):

    def setUp(self):
        self.censo = CensoTeorema.desde_resumen(verify_enumerated(4), orden_maximo=4)

    def test_desde_resumen(self):
        self.assertEqual(self.censo.extremales.count(), 2)
        self.assertEqual(self.censo.violaciones.count(), 0)
        self.assertEqual(self.censo.errores_parseo, 0)

    def test_cota(self):
        k4 = self.censo.extremales.get(orden=4)
        self.assertEqual(k4.cota, 6)
        self.assertEqual(k4.cota, k4.tamano)

    def test_clean(self):
        grafo = GrafoExtremal(censo=self.censo, graph6="Bg", orden=3, tamano=2, gamma_t=2, familia="NotInFamilies")
        with self.assertRaises(ValidationError):
            grafo.full_clean()
        grafo = GrafoExtremal(censo=self.censo, graph6="Bw", orden=3, tamano=3, gamma_t=4, familia="GdtwoF", k=0)
        with self.assertRaises(ValidationError):
            grafo.full_clean()


class VistasTests(TestCase):

    def setUp(self):
        self.user = User.objects.create_user(username='analista', password='clave-de-prueba')
        self.client.force_login(self.user)

    def test_requiere_login(self):
        self.client.logout()
        response = self.client.get(reverse('verificacion:check_json'), {'g6': 'C~'})
        self.assertEqual(response.status_code, 302)

    def test_check_json(self):
        response = self.client.get(reverse('verificacion:check_json'), {'g6': 'C~'})
        self.assertEqual(response.status_code, 200)
        self.assertTrue(response.json()["extremal"])

    def test_check_json_errores(self):
        response = self.client.get(reverse('verificacion:check_json'))
        self.assertEqual(response.status_code, 400)
        response = self.client.get(reverse('verificacion:check_json'), {'g6': 'Bx'})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()["offset"], 1)
        response = self.client.get(reverse('verificacion:check_json'), {'g6': 'A_'})
        self.assertEqual(response.status_code, 400)

    def test_classify_json(self):
        response = self.client.get(reverse('verificacion:classify_json'), {'g6': 'Bw'})
        self.assertEqual(response.json(), {"family": "GdtwoF", "k": 0})

    def test_censos_y_excel(self):
        censo = CensoTeorema.desde_resumen(verify_enumerated(4), orden_maximo=4)
        datos = self.client.get(reverse('verificacion:censos_json')).json()
        self.assertEqual(len(datos["censos"]), 1)
        self.assertEqual(len(datos["censos"][0]["extremales"]), 2)
        response = self.client.get(reverse('verificacion:censo_excel', args=[censo.pk]))
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response['Content-Type'],
                         'application/vnd.openxmlformats-officedocument.spreadsheetml.sheet')
        self.assertEqual(self.client.get(reverse('verificacion:censo_excel', args=[censo.pk + 1])).status_code, 404)

from io import BytesIO

import xlsxwriter
from django.contrib.auth.decorators import login_required
from django.http import HttpResponse, JsonResponse
from django.shortcuts import get_object_or_404

from grafos.graph6 import Graph6Error, graph6_decode
from reconocimiento.clasificacion import CotaNoAplicable, InconsistenciaInterna, check_bound, classify

from .models import CensoTeorema


def _grafo_de_peticion(request):
    texto = request.GET.get('g6', '').strip()
    if not texto:
        return None, JsonResponse({'error': "Falta el parámetro g6"}, status=400)
    try:
        return graph6_decode(texto), None
    except Graph6Error as e:
        return None, JsonResponse({'error': e.mensaje, 'offset': e.offset}, status=400)


@login_required
def check_json(request):
    """
    Informe de extremalidad de un grafo graph6 (?g6=...).
    """
    G, error = _grafo_de_peticion(request)
    if error:
        return error
    try:
        informe = check_bound(G)
    except CotaNoAplicable as e:
        return JsonResponse({'error': str(e)}, status=400)
    except InconsistenciaInterna as e:
        return JsonResponse({'error': str(e)}, status=500)
    return JsonResponse(informe.to_dict())


@login_required
def classify_json(request):
    G, error = _grafo_de_peticion(request)
    if error:
        return error
    try:
        clasificacion = classify(G)
    except InconsistenciaInterna as e:
        return JsonResponse({'error': str(e)}, status=500)
    datos = clasificacion.to_dict()
    if clasificacion.nota:
        datos['note'] = clasificacion.nota
    return JsonResponse(datos)


@login_required
def censos_json(request):
    """
    Censos guardados con sus extremales.
    """
    censos = CensoTeorema.objects.prefetch_related('extremales').all()

    censos_data = []
    for censo in censos:
        censos_data.append({
            'id': censo.id,
            'fuente': censo.fuente,
            'fecha': censo.fecha.strftime('%d/%m/%Y %H:%M'),
            'orden_maximo': censo.orden_maximo,
            'por_orden': censo.por_orden,
            'verificados': censo.verificados,
            'omitidos': censo.omitidos,
            'errores_parseo': censo.errores_parseo,
            'ok': censo.ok,
            'extremales': [
                {'graph6': g.graph6, 'n': g.orden, 'm': g.tamano, 'gamma_t': g.gamma_t,
                 'classification': {'family': g.familia, 'k': g.k}}
                for g in censo.extremales.all()
            ],
        })

    return JsonResponse({
        'censos': censos_data
    })


@login_required
def exportar_censo_excel(request, pk):
    """Genera un archivo Excel con los grafos extremales de un censo."""
    censo = get_object_or_404(CensoTeorema, pk=pk)
    output = BytesIO()
    workbook = xlsxwriter.Workbook(output)
    worksheet = workbook.add_worksheet("Extremales")

    title_format = workbook.add_format({
        'bold': True,
        'font_size': 14,
        'align': 'center',
        'valign': 'vcenter',
        'bg_color': '#3B82F6',
        'font_color': 'white'
    })
    header_format = workbook.add_format({
        'bold': True,
        'align': 'center',
        'bg_color': '#D1D5DB',
        'border': 1
    })
    text_format = workbook.add_format({'align': 'left', 'border': 1})
    number_format = workbook.add_format({'align': 'right', 'border': 1})

    titulo = f"Censo {censo.pk} - {censo.fuente} - {'sin violaciones' if censo.ok else 'CON VIOLACIONES'}"
    worksheet.merge_range('A1:G1', titulo, title_format)
    worksheet.set_row(0, 30)

    headers = ['graph6', 'n', 'm', 'γ_t', 'Cota 3(n - γ_t)', 'Familia', 'k']
    for col, header in enumerate(headers):
        worksheet.write(2, col, header, header_format)

    for row, grafo in enumerate(censo.extremales.all()):
        worksheet.write(row + 3, 0, grafo.graph6, text_format)
        worksheet.write(row + 3, 1, grafo.orden, number_format)
        worksheet.write(row + 3, 2, grafo.tamano, number_format)
        worksheet.write(row + 3, 3, grafo.gamma_t, number_format)
        worksheet.write(row + 3, 4, grafo.cota, number_format)
        worksheet.write(row + 3, 5, grafo.familia, text_format)
        worksheet.write(row + 3, 6, '' if grafo.k is None else grafo.k, number_format)

    worksheet.set_column('A:A', 25)
    worksheet.set_column('B:G', 14)
    workbook.close()

    output.seek(0)
    response = HttpResponse(
        output.read(),
        content_type='application/vnd.openxmlformats-officedocument.spreadsheetml.sheet'
    )
    response['Content-Disposition'] = f'attachment; filename="censo_{censo.pk}.xlsx"'
    return response

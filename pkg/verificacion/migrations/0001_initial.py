# Generated by Django 6.0 on 2026-10-18 10:12

import django.core.validators
import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CensoTeorema',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('fuente', models.CharField(max_length=255, verbose_name='Fuente')),
                ('orden_maximo', models.IntegerField(blank=True, null=True, verbose_name='Orden máximo')),
                ('por_orden', models.JSONField(blank=True, default=dict, verbose_name='Grafos por orden')),
                ('verificados', models.IntegerField(default=0, validators=[django.core.validators.MinValueValidator(0)], verbose_name='Verificados')),
                ('omitidos', models.IntegerField(default=0, validators=[django.core.validators.MinValueValidator(0)], verbose_name='Omitidos')),
                ('errores_parseo', models.IntegerField(default=0, validators=[django.core.validators.MinValueValidator(0)], verbose_name='Errores de parseo')),
                ('segundos', models.FloatField(default=0, verbose_name='Tiempo (s)')),
                ('workers', models.IntegerField(default=1, validators=[django.core.validators.MinValueValidator(1)], verbose_name='Workers')),
                ('ok', models.BooleanField(default=True, verbose_name='Sin violaciones')),
                ('fecha', models.DateTimeField(auto_now_add=True, verbose_name='Fecha')),
            ],
            options={
                'verbose_name': 'Censo',
                'verbose_name_plural': 'Censos',
                'ordering': ['-fecha'],
            },
        ),
        migrations.CreateModel(
            name='GrafoExtremal',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('graph6', models.CharField(max_length=255, verbose_name='graph6 canónico')),
                ('orden', models.IntegerField(validators=[django.core.validators.MinValueValidator(3)], verbose_name='n')),
                ('tamano', models.IntegerField(validators=[django.core.validators.MinValueValidator(0)], verbose_name='m')),
                ('gamma_t', models.IntegerField(validators=[django.core.validators.MinValueValidator(1)], verbose_name='γ_t')),
                ('familia', models.CharField(choices=[('Gdone', 'Gdone'), ('GdtwoF', 'GdtwoF'), ('GdtwoL', 'GdtwoL'), ('GcubG', 'GcubG'), ('GcubH', 'GcubH'), ('GcubGP16', 'GcubGP16'), ('NotInFamilies', 'NotInFamilies')], max_length=20, verbose_name='Familia')),
                ('k', models.IntegerField(blank=True, null=True, verbose_name='k')),
                ('censo', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='extremales', to='verificacion.censoteorema', verbose_name='Censo')),
            ],
            options={
                'verbose_name': 'Grafo extremal',
                'verbose_name_plural': 'Grafos extremales',
                'ordering': ['censo', 'orden', 'graph6'],
            },
        ),
        migrations.CreateModel(
            name='ViolacionTeorema',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('linea', models.IntegerField(blank=True, null=True, verbose_name='Línea')),
                ('graph6', models.CharField(max_length=255, verbose_name='graph6')),
                ('motivo', models.TextField(verbose_name='Motivo')),
                ('censo', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='violaciones', to='verificacion.censoteorema', verbose_name='Censo')),
            ],
            options={
                'verbose_name': 'Violación',
                'verbose_name_plural': 'Violaciones',
            },
        ),
    ]

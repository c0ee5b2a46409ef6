from django.urls import reverse_lazy
from django.utils.translation import gettext_lazy as _

UNFOLD = {
    "SITE_TITLE": "Dominación total",
    "SITE_HEADER": "Dominación total",
    "SITE_SUBHEADER": "Cota m <= Δ(n - γ_t) y familias extremales",
    "SITE_URL": "/",
    "SITE_SYMBOL": "hub",
    "SHOW_HISTORY": False,
    "SHOW_VIEW_ON_SITE": False,
    "SHOW_BACK_BUTTON": True,
    "BORDER_RADIUS": "6px",
    "COLORS": {
        "primary": {
            "50": "239 246 255",
            "100": "219 234 254",
            "200": "191 219 254",
            "300": "147 197 253",
            "400": "96 165 250",
            "500": "59 130 246",
            "600": "37 99 235",
            "700": "29 78 216",
            "800": "30 64 175",
            "900": "30 58 138",
            "950": "23 37 84",
        },
    },
    "SIDEBAR": {
        "show_search": True,
        "show_all_applications": True,
        "navigation": [
            {
                "title": _("Dashboard"),
                "separator": True,
                "collapsible": False,
                "items": [
                    {
                        "title": _("Dashboard"),
                        "icon": "dashboard",
                        "link": reverse_lazy("admin:index"),
                        "permission": lambda request: request.user.is_staff,
                    },
                ],
            },
            {
                "title": _("Verificación"),
                "separator": True,
                "collapsible": True,
                "items": [
                    {
                        "title": _("Censos"),
                        "icon": "fact_check",
                        "link": reverse_lazy("admin:verificacion_censoteorema_changelist"),
                    },
                    {
                        "title": _("Grafos extremales"),
                        "icon": "hub",
                        "link": reverse_lazy("admin:verificacion_grafoextremal_changelist"),
                    },
                    {
                        "title": _("Violaciones"),
                        "icon": "report",
                        "link": reverse_lazy("admin:verificacion_violacionteorema_changelist"),
                    },
                ],
            },
            {
                "title": _("Administración"),
                "separator": True,
                "collapsible": True,
                "items": [
                    {
                        "title": _("Usuarios"),
                        "icon": "person",
                        "link": reverse_lazy("admin:auth_user_changelist"),
                    },
                    {
                        "title": _("Grupos"),
                        "icon": "group",
                        "link": reverse_lazy("admin:auth_group_changelist"),
                    },
                ],
            },
        ],
    },
}

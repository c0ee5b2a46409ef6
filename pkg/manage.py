#!/usr/bin/env python
"""Django's command-line utility for administrative tasks and the domination toolkit commands."""
import os
import sys


def main(argv=None):
    """Run administrative tasks."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'Dominacionproject.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    execute_from_command_line(argv if argv is not None else sys.argv)
    return 0


cli_main = main


if __name__ == '__main__':
    sys.exit(main())

"""Configure Django before pytest collects the ``quiverlab`` tests."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'main.settings')
django.setup()

"""The project application: settings and logging for quiverlab.

Nothing is served from here. The work happens in the ``quiverlab`` app; start
with its management commands in ``quiverlab.management.commands`` and the
``QUIVERLAB`` defaults in ``main.settings``.

"""

"""The quiverlab commands: ``indec``, ``thick``, ``recollement``,
``bijection``, ``silting`` and ``linter``."""

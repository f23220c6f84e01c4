"""Management customizations for the quiverlab application."""

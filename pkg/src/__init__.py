"""Ignorant-Spreader-Stifler rumor dynamics: models, integration and analysis."""

"""Middlewares package."""
from .dependency_injection import DependencyInjectionMiddleware

__all__ = ["DependencyInjectionMiddleware"]

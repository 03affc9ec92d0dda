"""Collectors that run verification suites"""
from .case_collector import CaseCollector

__all__ = [
    'CaseCollector'
]

"""Metrics aggregation and seeded generators for the suites"""

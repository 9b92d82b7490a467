"""Catalog graphs, their verification, and graph generators."""

"""
CLI package for stirsort

This package provides the command-line interface and the experiment
harness producing CSV reports.
"""

from .interface import main

__all__ = ['main']

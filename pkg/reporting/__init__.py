"""
Reporting - terminal output and the full per-vector report document.
"""

from .human_logger import HumanLogger
from .report_builder import LocalModelEntry, FullReport, build_report

__all__ = ['HumanLogger', 'LocalModelEntry', 'FullReport', 'build_report']

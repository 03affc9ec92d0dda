"""Exact symbolic engine for the Heisenberg calculus on foliated tori"""
from .base import CaseResult, ReportEmitter, VerificationCase, VerificationSuite
from .config import EngineConfig, EngineSetup
from .emitters.console import ConsoleEmitter
from .errors import DocumentError, DomainError, HeisenbergError, VerificationFailure
from .models import VerificationReport

__version__ = "0.1.0"

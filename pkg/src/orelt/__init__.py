"""Computations with one-relator groups with torsion."""
from .errors import (CertificateError, DomainError, MalformedInputError, OreltError, ParseError,
                     ResourceError, StructuralError)
from .presentation import OneRelatorPresentation, Presentation
from .quotients import Status, Verdict
from .words import CyclicWord, Word

__version__ = "0.1.0"

__all__ = [
    "CertificateError", "CyclicWord", "DomainError", "MalformedInputError", "OneRelatorPresentation",
    "OreltError", "ParseError", "Presentation", "ResourceError", "Status", "StructuralError", "Verdict",
    "Word",
]

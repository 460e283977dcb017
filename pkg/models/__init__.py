# Import models to make them available when importing from the models package
from .output_models import DecompositionOutput, NullHomotopyOutput, OrbitOutput, RelatorOutput, SSeqOutput
from .report_models import Counterexample, VerificationReport
from .smallcancel_models import PieceReport

"""
This __init__.py file makes the 'models' directory a Python package.
It also serves to expose selected models directly when the 'models' package is imported.
"""

__all__ = [
    'Counterexample',
    'DecompositionOutput',
    'NullHomotopyOutput',
    'OrbitOutput',
    'PieceReport',
    'RelatorOutput',
    'SSeqOutput',
    'VerificationReport',
]

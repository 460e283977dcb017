"""
Property sweeps behind the `verify` subcommand, one verifier class per property.
"""
from .connection_verifier import ConnectionVerifier
from .orbit_verifiers import NullHomotopyVerifier, OrbitVerifier
from .rational_verifiers import EndpointsVerifier, PredecessorVerifier, RoundTripVerifier, WellOrderingVerifier
from .sequence_verifiers import CsTermsVerifier, DecompositionVerifier, HalfRotationVerifier, RecurrenceVerifier
from .smallcancel_verifier import SmallCancellationVerifier
from .word_verifiers import FlipVerifier, RelatorVerifier

# Property name -> verifier class, in the order `verify all` runs them.
VERIFIERS = {
    "round-trip": RoundTripVerifier,
    "well-ordering": WellOrderingVerifier,
    "predecessor": PredecessorVerifier,
    "endpoints": EndpointsVerifier,
    "relator": RelatorVerifier,
    "flip": FlipVerifier,
    "half-rotation": HalfRotationVerifier,
    "cs-terms": CsTermsVerifier,
    "recurrence": RecurrenceVerifier,
    "decomposition": DecompositionVerifier,
    "c4t4": SmallCancellationVerifier,
    "connection": ConnectionVerifier,
    "orbit": OrbitVerifier,
    "nullhomotopy": NullHomotopyVerifier,
}

__all__ = [
    'ConnectionVerifier',
    'CsTermsVerifier',
    'DecompositionVerifier',
    'EndpointsVerifier',
    'FlipVerifier',
    'HalfRotationVerifier',
    'NullHomotopyVerifier',
    'OrbitVerifier',
    'PredecessorVerifier',
    'RecurrenceVerifier',
    'RelatorVerifier',
    'RoundTripVerifier',
    'SmallCancellationVerifier',
    'VERIFIERS',
    'WellOrderingVerifier',
]

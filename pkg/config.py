import logging
import os
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

load_dotenv()

# Directories for log files and saved verification reports.
LOG_DIR = os.getenv("BRIDGE_CANCEL_LOG_DIR", "logs")
REPORTS_DIR = os.getenv("BRIDGE_CANCEL_REPORTS_DIR", "reports")
LOG_RETENTION_DAYS = 3

# Sweep bounds.
DEFAULT_MAX_DENOMINATOR = 60
EXPANSION_MAX_DENOMINATOR = 200
ORDERING_MAX_DENOMINATOR = 50
SMALL_CANCELLATION_MAX_DENOMINATOR = 40
DEFAULT_BFS_CAP = 500

# Slopes r used by the sweeps that pair r with every small slope s.
CONNECTION_SAMPLE_R = ["[2]", "[3]", "[2,2]", "[1,2]", "[3,2,2]", "[1,1,2]", "[2,1,3]"]
ORBIT_SAMPLE_R = ["1/2", "1/3", "2/5", "3/5", "5/17"]


def get_thread_count() -> int:
    """
    Number of worker threads for verification sweeps.

    Read from BRIDGE_CANCEL_THREADS; falls back to the CPU count when unset or
    invalid, and is never below 1.
    """
    default = os.cpu_count() or 1
    value = os.getenv("BRIDGE_CANCEL_THREADS")
    if value is None or not value.strip():
        return default
    try:
        return max(1, int(value))
    except ValueError:
        logging.warning(f"Ignoring BRIDGE_CANCEL_THREADS={value!r}; using {default} threads")
        return default


class VerifierConfig:
    """
    Configuration for one verifiable property.

    Bundles the property name used on the command line, a one-line description
    and the default sweep bounds; command line flags override the bounds.
    """

    def __init__(
        self,
        name: str,
        description: str,
        max_denominator: int = DEFAULT_MAX_DENOMINATOR,
        sample_r: Optional[List[str]] = None,
        bfs_cap: Optional[int] = None,
    ):
        """
        Initializes a new VerifierConfig instance.

        Args:
            name (str): The property name, e.g. "half-rotation".
            description (str): What the sweep checks.
            max_denominator (int): Largest denominator of the swept slopes.
            sample_r (Optional[List[str]]): Slopes r paired with every swept slope s, for two-slope properties.
            bfs_cap (Optional[int]): Denominator cap of the orbit search, for the orbit property.
        """
        self.name = name
        self.description = description
        self.max_denominator = max_denominator
        self.sample_r = list(sample_r) if sample_r is not None else []
        self.bfs_cap = bfs_cap

        # Saved reports live in one directory per property.
        self.REPORTS_DIR = Path(REPORTS_DIR) / name


VERIFIER_CONFIGS = {
    config.name: config
    for config in [
        VerifierConfig("round-trip", "Continued fraction expansion, evaluation and text parsing round-trip", max_denominator=EXPANSION_MAX_DENOMINATOR),
        VerifierConfig(
            "well-ordering",
            "The predecessor chain descends strictly to [1] and the well-ordering is total, antisymmetric and transitive",
            max_denominator=ORDERING_MAX_DENOMINATOR,
        ),
        VerifierConfig("predecessor", "r = r~/(1 + r~) when m1 >= 2 and r = 1 - r~ when m1 = 1", max_denominator=EXPANSION_MAX_DENOMINATOR),
        VerifierConfig("endpoints", "r1 < r < r2 with r1 and r2 Farey neighbours of r"),
        VerifierConfig("relator", "u_r has length 2p, alternates, starts with a and carries the signs (-1)^floor(iq/p)"),
        VerifierConfig("flip", "The automorphism b -> b^-1 sends u_r~ to u_r or its inverse when m1 = 1"),
        VerifierConfig("half-rotation", "S(u_r) equals the floor-star sequence, has 2q terms summing to 2p and is half-rotation invariant"),
        VerifierConfig("cs-terms", "CS(1/m) = ((m, m)); otherwise CS(r) takes exactly the values m1 and m1 + 1"),
        VerifierConfig("recurrence", "CS(r) follows from CS(r~) by adding one or by flipping"),
        VerifierConfig("decomposition", "CS(r) = ((S1, S2, S1, S2)) with symmetric blocks occurring exactly twice"),
        VerifierConfig("c4t4", "The symmetrized relator satisfies C(4) and T(4)", max_denominator=SMALL_CANCELLATION_MAX_DENOMINATOR),
        VerifierConfig(
            "connection",
            "The continued fraction conditions, the open interval test and the pattern test agree",
            max_denominator=SMALL_CANCELLATION_MAX_DENOMINATOR,
            sample_r=CONNECTION_SAMPLE_R,
        ),
        VerifierConfig(
            "orbit",
            "Orbit reduction is canonical, idempotent, generator invariant and agrees with the orbit search",
            sample_r=ORBIT_SAMPLE_R,
            bfs_cap=DEFAULT_BFS_CAP,
        ),
        VerifierConfig(
            "nullhomotopy",
            "Null-homotopic loops carry the (S1, S2) pattern and loops in I1 ∪ I2 are essential",
            max_denominator=SMALL_CANCELLATION_MAX_DENOMINATOR,
            sample_r=CONNECTION_SAMPLE_R,
        ),
    ]
}

from typing import List, Optional

from models.smallcancel_models import PieceReport
from twobridge.rational import ExtendedRational, slopes_up_to
from twobridge.smallcancel import piece_report, symmetrize
from twobridge.word import relator
from verifiers.base_verifier import BaseVerifier


class SmallCancellationVerifier(BaseVerifier):
    """Every slope 0 < r < 1 in range gives a symmetrized set satisfying C(4) and T(4)."""

    def get_cases_to_check(self) -> List[ExtendedRational]:
        return [r for r in slopes_up_to(self.max_denominator) if r != 1]

    def check_case(self, r: ExtendedRational) -> Optional[str]:
        problems = symmetrize(relator(r)).audit()
        if problems:
            return f"symmetrized set is malformed: {'; '.join(problems[:3])}"
        report = PieceReport.from_statistics(piece_report(r))
        if not (report.c4 and report.t4):
            return f"c4={report.c4} t4={report.t4} (max piece {report.max_piece_length}, min pieces {report.min_pieces_per_relator})"
        return None

import asyncio
import logging
import os
import signal
import threading
from abc import ABC, abstractmethod
from typing import Any, List, Optional, Sequence, Tuple

from config import VerifierConfig, get_thread_count
from models.report_models import Counterexample, VerificationReport
from twobridge.rational import ExtendedRational, parse_slope
from utils.data_utils import sanitize_filename, save_records_to_csv, save_to_json

class BaseVerifier(ABC):
    """
    Abstract base class for property sweeps. Provides the common machinery:
    case enumeration, bounded concurrent evaluation on worker threads, graceful
    shutdown on Ctrl+C, a deterministic merge of the counterexamples and report
    persistence. Subclasses supply the cases and the check for one case.
    """
    def __init__(
        self,
        config: VerifierConfig,
        max_denominator: Optional[int] = None,
        sample_r: Optional[Sequence[str]] = None,
        bfs_cap: Optional[int] = None,
        threads: Optional[int] = None,
        chunk_size: int = 32,
    ):
        """
        Initializes the verifier with its property configuration and sweep bounds.

        Args:
            config (VerifierConfig): The configuration of the verified property.
            max_denominator (Optional[int]): Overrides the configured largest denominator.
            sample_r (Optional[Sequence[str]]): Overrides the configured sample slopes r.
            bfs_cap (Optional[int]): Overrides the configured orbit search cap.
            threads (Optional[int]): Worker threads; defaults to BRIDGE_CANCEL_THREADS.
            chunk_size (int): Number of cases handed to a worker at once.
        """
        self.config = config
        self.property_name = config.name
        self.max_denominator = max_denominator if max_denominator is not None else config.max_denominator
        self.sample_r: List[ExtendedRational] = [parse_slope(text) for text in (sample_r if sample_r else config.sample_r)]
        self.bfs_cap = bfs_cap if bfs_cap is not None else config.bfs_cap
        self.threads = threads if threads is not None else get_thread_count()
        self.chunk_size = max(1, chunk_size)
        self.stop_event = threading.Event() # Set on Ctrl+C; running chunks finish, pending ones are skipped.
        self.report: Optional[VerificationReport] = None
        self._cases: Optional[List[Any]] = None

    @abstractmethod
    def get_cases_to_check(self) -> List[Any]:
        """
        Abstract method to be implemented by subclasses. Returns the cases of the
        sweep in their fixed order; the position of a case is its case index.
        """
        pass

    @abstractmethod
    def check_case(self, case: Any) -> Optional[str]:
        """
        Abstract method to be implemented by subclasses. Checks one case.

        Returns:
            Optional[str]: None if the property holds, otherwise a description of the failure.
        """
        pass

    def describe_case(self, case: Any) -> str:
        if isinstance(case, tuple):
            return " ".join(f"{name}={value}" for name, value in zip(("r", "s"), case))
        return f"r={case}"

    @property
    def slope_range(self) -> str:
        text = f"q/p in (0, 1] with p <= {self.max_denominator}"
        if self.sample_r:
            text += "; r in {" + ", ".join(str(r) for r in self.sample_r) + "}"
        return text

    @property
    def cases(self) -> List[Any]:
        if self._cases is None:
            self._cases = list(self.get_cases_to_check())
        return self._cases

    def _run_case(self, index: int, case: Any) -> Optional[Counterexample]:
        try:
            detail = self.check_case(case)
        except Exception as e:
            # A raised error is a failed case, not a failed sweep.
            logging.debug(f"{self.property_name} case {index} raised {type(e).__name__}: {e}")
            detail = f"{type(e).__name__}: {e}"
        if detail is None:
            return None
        return Counterexample(property=self.property_name, case_index=index, case=self.describe_case(case), detail=detail)

    def _run_chunk(self, chunk: List[Tuple[int, Any]]) -> List[Counterexample]:
        failures = []
        for index, case in chunk:
            failure = self._run_case(index, case)
            if failure is not None:
                failures.append(failure)
        return failures

    def _signal_handler(self, signum, frame):
        logging.info("Ctrl+C detected. Finishing running chunks and stopping...")
        self.stop_event.set()

    async def verify(self) -> VerificationReport:
        """
        Runs every case of the sweep and merges the outcome into a report.

        Chunks of cases run on worker threads, at most `threads` at a time. The
        counterexamples are sorted by case index, so the report does not depend
        on scheduling.
        """
        previous_handler = None
        if threading.current_thread() is threading.main_thread():
            previous_handler = signal.signal(signal.SIGINT, self._signal_handler)

        try:
            indexed = list(enumerate(self.cases))
            chunks = [indexed[i:i + self.chunk_size] for i in range(0, len(indexed), self.chunk_size)]
            semaphore = asyncio.Semaphore(self.threads)
            logging.info(f"Verifying {self.property_name}: {len(indexed)} cases in {len(chunks)} chunks on {self.threads} threads")

            async def run_chunk(position: int, chunk: List[Tuple[int, Any]]) -> Tuple[List[Counterexample], int]:
                async with semaphore:
                    if self.stop_event.is_set():
                        return [], 0
                    logging.info(f"Checking chunk {position + 1}/{len(chunks)} of {self.property_name}")
                    failures = await asyncio.to_thread(self._run_chunk, chunk)
                    return failures, len(chunk)

            results = await asyncio.gather(*(run_chunk(position, chunk) for position, chunk in enumerate(chunks)))
        finally:
            if previous_handler is not None:
                signal.signal(signal.SIGINT, previous_handler)

        failures = sorted((failure for chunk_failures, _ in results for failure in chunk_failures), key=lambda f: f.case_index)
        cases_checked = sum(count for _, count in results)
        if self.stop_event.is_set():
            logging.warning(f"{self.property_name} stopped early after {cases_checked} of {len(indexed)} cases")
        self.report = VerificationReport(
            property=self.property_name,
            slope_range=self.slope_range,
            cases_checked=cases_checked,
            failures=failures,
        )
        if failures:
            logging.error(f"{self.property_name}: {len(failures)} counterexamples in {cases_checked} cases")
        else:
            logging.info(f"{self.property_name}: all {cases_checked} cases passed")
        return self.report

    def recheck(self, counterexample: Counterexample) -> bool:
        """Re-runs the case behind a counterexample; True if it still fails."""
        return self._run_case(counterexample.case_index, self.cases[counterexample.case_index]) is not None

    def save_data(self, output_dir: Optional[str] = None) -> Tuple[str, str]:
        """
        Saves the last report as JSON and its counterexamples as CSV.

        Returns:
            Tuple[str, str]: Paths of the report and of the counterexample file.
        """
        if self.report is None:
            raise RuntimeError("verify() must run before save_data()")
        directory = output_dir if output_dir is not None else str(self.config.REPORTS_DIR)
        stem = sanitize_filename(self.property_name)
        report_path = os.path.join(directory, f"{stem}_report.json")
        counterexamples_path = os.path.join(directory, f"{stem}_counterexamples.csv")
        save_to_json(self.report.model_dump(), report_path)
        save_records_to_csv(self.report.failures, counterexamples_path, Counterexample)
        logging.info(f"Saved {self.property_name} report to {report_path}")
        return report_path, counterexamples_path

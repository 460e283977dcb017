import argparse
import asyncio
import json
import logging
import os
import sys
from datetime import datetime, timedelta
from logging.handlers import RotatingFileHandler
from typing import List, Optional

from pydantic import BaseModel

from config import LOG_DIR, LOG_RETENTION_DAYS, VERIFIER_CONFIGS
from models.output_models import DecompositionOutput, NullHomotopyOutput, OrbitOutput, RelatorOutput, SSeqOutput
from models.report_models import VerificationReport
from models.smallcancel_models import PieceReport
from twobridge.errors import DomainError, SlopeParseError, TwoBridgeError, WordParseError
from twobridge.farey import reduce_to_fundamental
from twobridge.rational import ExtendedRational, cf_expand, parse_slope
from twobridge.smallcancel import piece_report
from twobridge.sseq import decompose, decomposition_occurrences, pattern_word_length, s_sequence, slope_cs, slope_sseq
from twobridge.word import relator
from utils.cli_utils import display_report_summary
from utils.enums import ExitCode, OutputFormat
from verifiers import VERIFIERS

# Function to clean up old log files
def cleanup_old_logs(log_dir, days_old=LOG_RETENTION_DAYS):
    now = datetime.now()
    for filename in os.listdir(log_dir):
        filepath = os.path.join(log_dir, filename)
        if os.path.isfile(filepath):
            file_mod_time = datetime.fromtimestamp(os.path.getmtime(filepath))
            if (now - file_mod_time) > timedelta(days=days_old):
                os.remove(filepath)
                logging.info(f"Cleaned up old log file: {filename}")

def setup_logging(log_dir: str, verbose: bool = False) -> logging.Logger:
    """
    Logs to a rotating file in log_dir and to stderr; stdout is left for command output.
    Calling it again replaces the handlers installed by the previous call.
    """
    os.makedirs(log_dir, exist_ok=True)
    log_filepath = os.path.join(log_dir, datetime.now().strftime("%Y%m%d_%H%M%S.log"))

    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    for handler in list(logger.handlers):
        if getattr(handler, "bridge_cancel", False):
            logger.removeHandler(handler)
            handler.close()

    formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(message)s')

    # MaxBytes is about 2000 lines of 100 characters; the current file plus 5 backups are kept.
    file_handler = RotatingFileHandler(log_filepath, maxBytes=200 * 1024, backupCount=5)
    console_handler = logging.StreamHandler(sys.stderr)
    for handler in (file_handler, console_handler):
        handler.setFormatter(formatter)
        handler.bridge_cancel = True
        logger.addHandler(handler)
    return logger

def parse_open_unit_slope(text: str) -> ExtendedRational:
    """Parses r for the operations that need 0 < r < 1."""
    r = parse_slope(text)
    if r.is_infinite or r == 1:
        raise DomainError(f"r = {r} is a trivial case treated separately; give a slope with 0 < r < 1")
    if not 0 < r < 1:
        raise DomainError(f"r = {r} is outside 0 < r < 1")
    return r

def emit(model: BaseModel, output_format: OutputFormat):
    data = model.model_dump(by_alias=True)
    if output_format == OutputFormat.JSON:
        print(json.dumps(data, ensure_ascii=False))
        return
    for key, value in data.items():
        print(f"{key}: {value}")

def cmd_relator(args) -> ExitCode:
    r = parse_slope(args.r)
    word = relator(r)
    emit(RelatorOutput(r=str(r), word=str(word), tokens=word.tokens(), length=len(word), sseq=list(s_sequence(word))), args.output_format)
    return ExitCode.OK

def cmd_sseq(args) -> ExitCode:
    r = parse_slope(args.r)
    sseq = slope_sseq(r)
    emit(SSeqOutput(r=str(r), cf=list(cf_expand(r)), sseq=list(sseq), cyclic=list(slope_cs(r).canonical)), args.output_format)
    return ExitCode.OK

def cmd_decompose(args) -> ExitCode:
    r = parse_slope(args.r)
    cf = cf_expand(r)
    decomposition = decompose(cf)
    output = DecompositionOutput(
        r=str(r),
        cf=list(cf),
        cs=list(slope_cs(r).canonical),
        s1=list(decomposition.s1),
        s2=list(decomposition.s2),
        occurrences=decomposition_occurrences(cf),
        pattern_word_length=pattern_word_length(cf),
    )
    emit(output, args.output_format)
    return ExitCode.OK

def cmd_smallcancel(args) -> ExitCode:
    emit(PieceReport.from_statistics(piece_report(parse_open_unit_slope(args.r))), args.output_format)
    return ExitCode.OK

def cmd_orbit_reduce(args) -> ExitCode:
    r = parse_open_unit_slope(args.r)
    s = parse_slope(args.s)
    result = reduce_to_fundamental(r, s, fuel=args.fuel)
    output = OrbitOutput(
        r=str(r),
        s=str(s),
        canonical=str(result.canonical),
        null_homotopic=result.null_homotopic,
        trail=[matrix.to_list() for matrix in result.trail],
    )
    emit(output, args.output_format)
    return ExitCode.OK

def cmd_nullhomotopic(args) -> ExitCode:
    r = parse_open_unit_slope(args.r)
    s = parse_slope(args.s)
    result = reduce_to_fundamental(r, s, fuel=args.fuel)
    emit(NullHomotopyOutput(r=str(r), s=str(s), null_homotopic=result.null_homotopic, canonical=str(result.canonical)), args.output_format)
    return ExitCode.OK

async def verify_properties(
    names: List[str],
    max_denominator: Optional[int] = None,
    sample_r: Optional[List[str]] = None,
    bfs_cap: Optional[int] = None,
    output_dir: Optional[str] = None,
    summary: bool = False,
) -> List[VerificationReport]:
    """
    Runs the named property sweeps one after another and optionally saves each report.
    """
    reports = []
    for name in names:
        verifier = VERIFIERS[name](VERIFIER_CONFIGS[name], max_denominator=max_denominator, sample_r=sample_r, bfs_cap=bfs_cap)
        report = await verifier.verify()
        if output_dir:
            report_path, counterexamples_path = verifier.save_data(output_dir)
            if summary:
                display_report_summary(report_path, counterexamples_path)
        reports.append(report)
    return reports

def cmd_verify(args) -> ExitCode:
    if args.max_denominator is not None and args.max_denominator < 2:
        logging.error(f"--max-denominator must be at least 2, got {args.max_denominator}")
        return ExitCode.USAGE_ERROR
    if args.bfs_cap is not None and args.bfs_cap < 1:
        logging.error(f"--bfs-cap must be positive, got {args.bfs_cap}")
        return ExitCode.USAGE_ERROR
    for text in args.sample_r or []:
        parse_open_unit_slope(text)

    names = list(VERIFIERS) if args.property == "all" else [args.property]
    reports = asyncio.run(
        verify_properties(names, args.max_denominator, args.sample_r, args.bfs_cap, args.output_dir, args.summary)
    )

    if args.output_format == OutputFormat.JSON:
        payload = [report.model_dump() for report in reports]
        print(json.dumps(payload if len(payload) > 1 else payload[0], ensure_ascii=False))
    else:
        for report in reports:
            print(f"{report.property}: {'passed' if report.passed else 'FAILED'} ({report.cases_checked} cases, {len(report.failures)} failures)")
            for failure in report.failures:
                print(f"  [{failure.case_index}] {failure.case}: {failure.detail}")
    return ExitCode.OK if all(report.passed for report in reports) else ExitCode.PROPERTY_FAILED

def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value

def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    group = output.add_mutually_exclusive_group()
    group.add_argument("--json", dest="output_format", action="store_const", const=OutputFormat.JSON, help="print JSON (default)")
    group.add_argument("--text", dest="output_format", action="store_const", const=OutputFormat.TEXT, help="print plain text")
    output.set_defaults(output_format=OutputFormat.JSON)
    output.add_argument("--verbose", action="store_true", help="log at DEBUG level")

    parser = argparse.ArgumentParser(
        prog="bridge-cancel",
        description="Relators, S-sequences, small cancellation and null-homotopy of loops for 2-bridge links.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, handler, help_text in [
        ("relator", cmd_relator, "print the relator u_r"),
        ("sseq", cmd_sseq, "print S(r) and CS(r)"),
        ("decompose", cmd_decompose, "print the decomposition CS(r) = ((S1, S2, S1, S2))"),
        ("smallcancel", cmd_smallcancel, "check C(4) and T(4) for 0 < r < 1"),
    ]:
        sub = subparsers.add_parser(name, parents=[output], help=help_text)
        sub.add_argument("r", help="slope as q/p or [m1,...,mk]")
        sub.set_defaults(handler=handler)

    for name, handler, help_text in [
        ("orbit-reduce", cmd_orbit_reduce, "reduce s to its canonical slope for r"),
        ("nullhomotopic", cmd_nullhomotopic, "decide whether the loop of slope s is null-homotopic in the complement of K(r)"),
    ]:
        sub = subparsers.add_parser(name, parents=[output], help=help_text)
        sub.add_argument("r", help="link slope with 0 < r < 1")
        sub.add_argument("s", help="loop slope, any extended rational")
        sub.add_argument("--fuel", type=positive_int, default=None, help="iteration cap of the reduction loop")
        sub.set_defaults(handler=handler)

    verify = subparsers.add_parser("verify", parents=[output], help="run a property sweep")
    verify.add_argument("property", choices=list(VERIFIERS) + ["all"])
    verify.add_argument("--max-denominator", type=int, default=None, help="largest denominator swept")
    verify.add_argument("--sample-r", nargs="+", default=None, help="slopes r for two-slope properties")
    verify.add_argument("--bfs-cap", type=int, default=None, help="denominator cap of the orbit search")
    verify.add_argument("--output-dir", default=None, help="save the report JSON and counterexample CSV here")
    verify.add_argument("--summary", action="store_true", help="print a summary of the saved files")
    verify.set_defaults(handler=cmd_verify)
    return parser

def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the command line tool.

    Exit codes: 0 success, 1 property failure or internal error, 2 usage or
    parse error, 3 input outside the domain of the operation.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else ExitCode.USAGE_ERROR

    setup_logging(LOG_DIR, verbose=args.verbose)
    # Clean up old logs at the start of the program
    cleanup_old_logs(LOG_DIR)

    try:
        return int(args.handler(args))
    except (SlopeParseError, WordParseError) as e:
        logging.error(str(e))
        return int(ExitCode.USAGE_ERROR)
    except DomainError as e:
        logging.warning(str(e))
        return int(ExitCode.DOMAIN_ERROR)
    except TwoBridgeError as e:
        logging.error(f"Internal failure: {type(e).__name__}: {e}")
        return int(ExitCode.PROPERTY_FAILED)

if __name__ == "__main__":
    sys.exit(main())

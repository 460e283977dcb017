import json
import logging

from utils.data_utils import load_records_from_csv

def display_report_summary(report_path, counterexamples_path, num_rows=5):
    """Reads a saved report and its counterexample CSV and displays a summary."""
    try:
        with open(report_path, 'r', encoding='utf-8') as f:
            report = json.load(f)
    except FileNotFoundError:
        print(f"File not found: {report_path}")
        return
    except json.JSONDecodeError as e:
        logging.error(f"Error decoding JSON from {report_path}: {e}")
        print(f"Error reading {report_path}: {e}")
        return

    print(f"\n--- {report['property']} Summary ---")
    print(f"Slopes: {report['slope_range']}")
    print(f"Cases checked: {report['cases_checked']}")
    print(f"Result: {'passed' if report['passed'] else 'FAILED'}")

    try:
        rows = load_records_from_csv(counterexamples_path)
    except FileNotFoundError:
        print(f"File not found: {counterexamples_path}")
        return

    print(f"Total counterexamples: {len(rows)}")
    if len(rows) > 0:
        print(f"First {num_rows} counterexamples (or fewer if less than {num_rows}):")
        for i, row in enumerate(rows.head(num_rows).itertuples(index=False)):
            print(f"  {i+1}. [{row.case_index}] {row.case}: {row.detail}")

"""
Persistent storage of verification reports for hopfwords

Each saved run is one JSON file in the results folder, named after the
suite and a timestamp, with the tail of the log buffer attached.
"""
import datetime
import glob
import json
import os

import config
from logging_manager import add_log, get_logs


def generate_timestamp():
    """Generate a timestamp string in the format YYYYMMDD_HHMMSS"""
    return datetime.datetime.now().strftime("%Y%m%d_%H%M%S")


def save_reports(suite, reports, folder=None, log_tail=50):
    """
    Write a suite run to the results folder

    Args:
        suite: name of the suite that produced the reports
        reports: list of Report objects
        folder: override of config.RESULTS_FOLDER

    Returns:
        str: path of the written file
    """
    folder = folder or config.create_results_folder()
    os.makedirs(folder, exist_ok=True)
    path = os.path.join(folder, f"{suite}_{generate_timestamp()}.json")
    record = {
        "suite": suite,
        "created": datetime.datetime.now().isoformat(),
        "passed": all(report.passed for report in reports),
        "reports": [report.to_dict() for report in reports],
        "logs": get_logs()[-log_tail:],
    }
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(record, f, indent=2, ensure_ascii=False)
    add_log(f"Saved {len(reports)} reports to {path}")
    return path


def load_reports(path):
    """Load a saved run"""
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


def list_saved_runs(folder=None, suite=None):
    """Saved run files, newest first"""
    folder = folder or config.RESULTS_FOLDER
    pattern = f"{suite}_*.json" if suite else "*.json"
    return sorted(glob.glob(os.path.join(folder, pattern)), key=os.path.getmtime, reverse=True)

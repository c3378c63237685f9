"""
Configuration settings for hopfwords
"""
import os

from dotenv import load_dotenv

# Pick up a local .env before reading any setting
load_dotenv()

# Exact arithmetic
COEFFICIENT_BITS = int(os.environ.get('HOPFWORDS_COEFFICIENT_BITS', 64))
COEFFICIENT_LIMIT = 2 ** (COEFFICIENT_BITS - 1)

# Verification bounds
DEGREE_BOUND = int(os.environ.get('HOPFWORDS_DEGREE_BOUND', 5))
DWHA_TOP_CAP = int(os.environ.get('HOPFWORDS_DWHA_TOP_CAP', 3))
DWHA_BOTTOM_CAP = int(os.environ.get('HOPFWORDS_DWHA_BOTTOM_CAP', 3))
DESCENT_N = int(os.environ.get('HOPFWORDS_DESCENT_N', 6))
HASSE_MAX_N = int(os.environ.get('HOPFWORDS_HASSE_MAX_N', 8))

# Random cross-implementation oracle
ORACLE_SAMPLES = int(os.environ.get('HOPFWORDS_ORACLE_SAMPLES', 500))
ORACLE_MAX_WEIGHT = int(os.environ.get('HOPFWORDS_ORACLE_MAX_WEIGHT', 8))
RANDOM_SEED = int(os.environ.get('HOPFWORDS_RANDOM_SEED', 2004))

# Output
RESULTS_FOLDER = os.environ.get('HOPFWORDS_RESULTS_FOLDER', 'verification_results')
LOG_LEVEL = os.environ.get('HOPFWORDS_LOG_LEVEL', 'WARNING')
LOG_BUFFER_SIZE = 1000


def create_results_folder():
    """Create the folder saved reports are written to"""
    os.makedirs(RESULTS_FOLDER, exist_ok=True)
    return RESULTS_FOLDER


def parse_cap(text):
    """Parse a "TOP,BOTTOM" cap pair, a single number applies to both"""
    parts = [p.strip() for p in str(text).split(',') if p.strip()]
    if len(parts) == 1:
        return int(parts[0]), int(parts[0])
    if len(parts) == 2:
        return int(parts[0]), int(parts[1])
    raise ValueError(f"Invalid cap specification: {text!r}")

import os
import sys
import logging
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env
load_dotenv()

# Base directory of the project (2 levels above this file)
BASE_DIR = Path(__file__).resolve().parent.parent

# Logging configuration
LOG_LEVEL = os.getenv("QHA_LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_FILE = os.getenv("QHA_LOG_FILE", "")

# Shipped fixture configs
FIXTURES_DIR = Path(os.getenv("QHA_FIXTURES_DIR", str(Path(__file__).resolve().parent / "fixtures")))

# Degree cutoff for co-path / semi-path / braided computations
DEGREE_CUTOFF = int(os.getenv("QHA_DEGREE_CUTOFF", "4"))

# Enumeration bounds
PERMUTATION_BOUND = int(os.getenv("QHA_PERMUTATION_BOUND", "8"))
AUTOMORPHISM_BOUND = int(os.getenv("QHA_AUTOMORPHISM_BOUND", "64"))
THIN_SPLIT_BOUND = int(os.getenv("QHA_THIN_SPLIT_BOUND", "12"))
CHARACTER_CHECK_BOUND = int(os.getenv("QHA_CHARACTER_CHECK_BOUND", "64"))
CLASSIFY_BOUND = int(os.getenv("QHA_CLASSIFY_BOUND", "20000"))
DIMENSION_BOUND = int(os.getenv("QHA_DIMENSION_BOUND", "4096"))
REWRITE_STEP_BOUND = int(os.getenv("QHA_REWRITE_STEP_BOUND", "100000"))

# Free abelian groups are sampled in the box [-r, r]^rank when a finite basis is needed
SAMPLE_RADIUS = int(os.getenv("QHA_SAMPLE_RADIUS", "1"))

# Randomized checks (confluence, random product comparisons)
RANDOM_SEED = int(os.getenv("QHA_SEED", "0"))

# Output configuration
OUTPUT_FORMAT = os.getenv("QHA_OUTPUT_FORMAT", "text")  # 'text', 'json'
REPORT_TIMING = os.getenv("QHA_REPORT_TIMING", "False").lower() == "true"

# Application configuration
APP_NAME = os.getenv("QHA_APP_NAME", "quiver-hopf")
APP_VERSION = os.getenv("QHA_APP_VERSION", "0.1.0")
DEBUG_MODE = os.getenv("QHA_DEBUG_MODE", "False").lower() == "true"


# Initialize logging
def setup_logging(level: str = None):
    """Configures the logging system."""
    handlers = [logging.StreamHandler()]
    if LOG_FILE:
        os.makedirs(os.path.dirname(LOG_FILE) or ".", exist_ok=True)
        handlers.append(logging.FileHandler(LOG_FILE))

    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL).upper()),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True
    )

    # Reduce verbosity of some libraries
    logging.getLogger("sympy").setLevel(logging.WARNING)
    logging.getLogger("matplotlib").setLevel(logging.WARNING)


# Debugging information
def print_config_info():
    """Prints configuration information for debugging."""
    if DEBUG_MODE:
        print(f"== {APP_NAME} v{APP_VERSION} ==", file=sys.stderr)
        print(f"Base Dir: {BASE_DIR}", file=sys.stderr)
        print(f"Fixtures: {FIXTURES_DIR}", file=sys.stderr)
        print(f"Degree cutoff: {DEGREE_CUTOFF}", file=sys.stderr)
        print(f"Bounds: permutations={PERMUTATION_BOUND}, automorphisms={AUTOMORPHISM_BOUND}, "
              f"thin splits={THIN_SPLIT_BOUND}, classify={CLASSIFY_BOUND}, dimension={DIMENSION_BOUND}", file=sys.stderr)
        print(f"Seed: {RANDOM_SEED}", file=sys.stderr)
        print(f"Output: {OUTPUT_FORMAT} (timing: {'on' if REPORT_TIMING else 'off'})", file=sys.stderr)
        print(f"Log file: {LOG_FILE or 'console only'}", file=sys.stderr)

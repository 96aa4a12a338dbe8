"""CY4Vertex runtime settings

Values come from the process environment, optionally seeded from a `.env`
file next to the working directory. See `.env.example` for the full list.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from dotenv import load_dotenv
import os
import sys


#####################################################################
# Load runtime environment variables from .env

load_dotenv()


#####################################################################
# Internal helper

def _int_list(name: str, default: tuple) -> tuple:
    raw = os.getenv(name)
    if not raw:
        return default
    try:
        return tuple(int(part) for part in raw.split(","))
    except ValueError:
        print(f"ERROR! {name} must be a comma separated list of integers, got '{raw}'", file=sys.stderr)
        return default


def _int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if not raw:
        return default
    try:
        return int(raw, 0)
    except ValueError:
        print(f"ERROR! {name} must be an integer, got '{raw}'", file=sys.stderr)
        return default


#####################################################################
# Constants

# Directory for memoized vertex classes; caching is off when empty.
CY4VERTEX_CACHE_DIR = os.getenv("CY4VERTEX_CACHE_DIR", "")

# Default parallelism degree for per-fixed-point evaluation.
CY4VERTEX_JOBS = _int("CY4VERTEX_JOBS", os.cpu_count() or 1)

# Cocharacter used to specialize t1 = t2 = t3 = t4 = 1; must sum to zero.
CY4VERTEX_COCHARACTER = _int_list("CY4VERTEX_COCHARACTER", (1, 7, -3, -5))
if sum(CY4VERTEX_COCHARACTER) != 0 or len(CY4VERTEX_COCHARACTER) != 4:
    print(f"ERROR! CY4VERTEX_COCHARACTER must have 4 entries summing to 0, got {CY4VERTEX_COCHARACTER}", file=sys.stderr)
    CY4VERTEX_COCHARACTER = (1, 7, -3, -5)

# Fallback cocharacters tried in order when the default one is not generic.
COCHARACTER_FALLBACKS = ((2, 11, -5, -8), (3, -13, 17, -7), (5, -2, 9, -12))

# Seed for random evaluation points in fast equality checks and sign searches.
CY4VERTEX_SEED = _int("CY4VERTEX_SEED", 20230101)

# Largest number of free sign assignments a search may enumerate per order.
CY4VERTEX_SEARCH_BUDGET = _int("CY4VERTEX_SEARCH_BUDGET", 2 ** 20)

# Default directory for golden series output.
CY4VERTEX_GOLDEN_DIR = os.getenv("CY4VERTEX_GOLDEN_DIR", "golden")

# Progress lines go to stderr only when set.
CY4VERTEX_VERBOSE = bool(os.getenv("CY4VERTEX_VERBOSE"))

# Mersenne prime for modular evaluation.
MODULUS = 2 ** 61 - 1


#####################################################################
# Logging

def log(message: str) -> None:
    """Print a progress line to stderr when CY4VERTEX_VERBOSE is set."""
    if CY4VERTEX_VERBOSE:
        print(message, file=sys.stderr)


def warn(message: str) -> None:
    print(f"WARNING! {message}", file=sys.stderr)

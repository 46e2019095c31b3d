"""Application-wide constants and configuration values.

This module centralizes the algorithm defaults, stable identifiers, file
layout names and exit codes so that every other module reads them from one
place.
"""

# ============================================================================
# Algorithm Defaults (parameter setting used for all experiments)
# ============================================================================

DEFAULT_CROSSOVER_RATE = 0.9
DEFAULT_NFC_MAX_MULTIPLIER = 1000  # NFC_Max = multiplier * D
DIVERSITY_STUDY_NFC_MAX_MULTIPLIER = 5000
DEFAULT_EVTR = 1e-8
DEFAULT_N_RUN = 30
DEFAULT_CMF_VALUE = 0.9
DEFAULT_FACTOR_RANGE = (0.1, 1.5)
WIDE_FACTOR_RANGE = (0.0, 2.0)
DEFAULT_MASTER_SEED = 0
DEFAULT_ALPHA = 0.05

MIN_POPULATION_SIZE = 2

# ============================================================================
# Mutation Identifiers
# ============================================================================

SCHEME_RAND1 = "rand1"
SCHEME_BEST1 = "best1"
SCHEME_T2B1 = "t2b1"
SCHEME_RAND2 = "rand2"
SCHEME_BEST2 = "best2"

SCHEME_NAMES = [SCHEME_RAND1, SCHEME_BEST1, SCHEME_T2B1, SCHEME_RAND2, SCHEME_BEST2]

# Smallest population each scheme supports (reduced forms included)
SCHEME_MIN_POPULATION = {
    SCHEME_RAND1: 2,
    SCHEME_BEST1: 2,
    SCHEME_T2B1: 2,
    SCHEME_BEST2: 4,
    SCHEME_RAND2: 5,
}

MODE_CMF = "cmf"
MODE_SRMF = "srmf"
MODE_VRMF = "vrmf"

MODE_NAMES = [MODE_CMF, MODE_SRMF, MODE_VRMF]

# ============================================================================
# Benchmark Suite
# ============================================================================

CATEGORY_UNIMODAL = "uni-modal"
CATEGORY_MULTIMODAL = "multi-modal"
CATEGORY_COMPOSITE = "composite"

DEFAULT_BOUND = 100.0
SHIFT_FRACTION = 0.8  # shifts drawn inside 80% of the box
ELLIPSOID_CONDITION = 1e6
SCHWEFEL_ARGMAX = 420.968746227503
SCHWEFEL_SCALE = 10.0  # maps [-100, 100] onto [-1000, 1000] before the 420.97 offset
SCHWEFEL_LIMIT = 500.0

BENCHMARK_DATA_EXTENSION = ".npz"
NPZ_ENTRY_TIMESTAMP = (1980, 1, 1, 0, 0, 0)  # fixed zip entry time keeps archives byte-identical

# ============================================================================
# Diversity Simulation
# ============================================================================

SIMULATION_CMF_VALUE = 0.5
SIMULATION_FACTOR_RANGE = WIDE_FACTOR_RANGE
SIMULATION_BASE_VECTOR = (1.0, 1.0)
SIMULATION_BOX = (0.0, 3.0)
SIMULATION_MUTANT_SAMPLES = 100
SIMULATION_TRIAL_GENERATIONS = 10_000
SIMULATION_POPULATION_SIZE = 5
SIMULATION_DIMENSIONS = (10, 100, 1000)
MUTANT_CLOUD_FILENAME = "mutant_clouds.csv"
TRIAL_DIVERSITY_FILENAME = "trial_diversity.csv"
SIMULATION_SHARD_GENERATIONS = 2500  # generations per Monte-Carlo shard
SIMULATION_CHUNK_ELEMENTS = 2_000_000  # cap on G * N_P * D held in memory at once

PRESET_MUTANT_GEOMETRY = "mutant-geometry"
PRESET_TRIAL_DIVERSITY = "trial-diversity"

DIVERSITY_CSV_COLUMNS = [
    "d",
    "n_p",
    "mode",
    "generations",
    "c_d_mean",
    "p_d_mean",
    "c_d_sem",
    "p_d_sem",
]
POINT_CLOUD_ID_COLUMNS = ["mode", "sample"]  # followed by x1..xD

# ============================================================================
# Statistics
# ============================================================================

NORMAL_APPROXIMATION_MIN_SIZE = 10
MIN_SAMPLE_SIZE = 2

OUTCOME_BETTER = "better"
OUTCOME_EQUAL = "equal"
OUTCOME_WORSE = "worse"

OUTCOME_SYMBOLS = {OUTCOME_BETTER: "+", OUTCOME_EQUAL: "=", OUTCOME_WORSE: "-"}

METHOD_EXACT = "exact"
METHOD_NORMAL = "normal"

# ============================================================================
# Archive Layout
# ============================================================================

MANIFEST_FILENAME = "manifest.json"
RUN_FILENAME_PREFIX = "run"
RUN_FILENAME_EXTENSION = ".csv"
BENCHMARK_DATA_DIRECTORY = "benchmarks"
CELL_ID_SEPARATOR = "__"

HISTORY_CSV_COLUMNS = [
    "nfc",
    "best_value_so_far",
    "centroid_diversity",
    "pairwise_diversity",
]
CURVE_CSV_COLUMNS = [
    "nfc",
    "best_value_so_far_median",
    "best_value_so_far_iqr",
    "c_d_median",
    "p_d_median",
]
SUMMARY_CSV_COLUMNS = [
    "cell",
    "runs",
    "error_mean",
    "error_std",
    "error_median",
    "success_rate",
]

# ============================================================================
# Run / Cell Status
# ============================================================================

STATUS_PENDING = "pending"
STATUS_COMPLETED = "completed"
STATUS_FAILED = "failed"

TERMINATED_ERROR_REACHED = "ErrorReached"
TERMINATED_BUDGET_EXHAUSTED = "BudgetExhausted"

# ============================================================================
# CLI Exit Codes
# ============================================================================

EXIT_SUCCESS = 0
EXIT_ERROR = 1
EXIT_INVALID_CONFIG = 2
EXIT_PARTIAL_FAILURE = 3

# ============================================================================
# Environment Variables
# ============================================================================

ENV_ARCHIVE_DIRECTORY = "MDE_ARCHIVE_DIRECTORY"
ENV_WORKERS = "MDE_WORKERS"
ENV_LOG_LEVEL = "MDE_LOG_LEVEL"
ENV_ALPHA = "MDE_ALPHA"

DEFAULT_ARCHIVE_DIRECTORY = "archives"
DEFAULT_WORKERS = "1"
DEFAULT_LOG_LEVEL = "INFO"

# ============================================================================
# Logging
# ============================================================================

LOG_FORMAT = "%(asctime)s.%(msecs)03d %(levelname)s [%(name)s] %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

LOG_LEVEL_DEBUG = "DEBUG"
LOG_LEVEL_INFO = "INFO"
LOG_LEVEL_WARNING = "WARNING"
LOG_LEVEL_ERROR = "ERROR"
LOG_LEVEL_CRITICAL = "CRITICAL"

LOG_LEVELS = [
    LOG_LEVEL_DEBUG,
    LOG_LEVEL_INFO,
    LOG_LEVEL_WARNING,
    LOG_LEVEL_ERROR,
    LOG_LEVEL_CRITICAL,
]

# Configuration and constants

APP_NAME = "PatternHall"

# Enumeration guards (largest input size accepted per operation family)
DEFAULT_SIZE_GUARDS = {
    "coqspart": 10,
    "qspart": 12,
    "superinfiltration": 8,
    "delta_superinfiltration": 12,
    "supershuffle": 8,
    "mr": 10,
    "qsgen": 7,
    "coqsgen": 8,
    "psi": 8,
    "delay": 9,
    "antipode": 8,
}

# "brute" or "interleave"
DEFAULT_ENUMERATION_METHOD = "brute"

DEFAULT_VERIFY_SEED = 0
DEFAULT_SPOT_CHECKS = 25

DEFAULT_SERVER_HOST = "127.0.0.1"
DEFAULT_SERVER_PORT = 8765

ENTROPY_DECIMALS = 6

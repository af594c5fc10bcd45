"""
Configuration file for tqdlab
Verification caps, sampling seeds, sweep and logging settings
"""

import os

try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    print("⚠️  python-dotenv not installed. Environment overrides from .env are disabled")

# Cocycle verification
MAX_COCYCLE_CHECK_ORDER = 16  # verify_3cocycle enumerates |G|^4 quadruples

# Quasi-Hopf axiom verification
FULL_ENUMERATION_MAX_ORDER = 8  # Full basis-tuple sweep up to this |G|
DEFAULT_SEED = int(os.getenv("TQD_SEED", "0"))
DEFAULT_SAMPLE_SIZE = int(os.getenv("TQD_SAMPLE_SIZE", "512"))  # Tuples per axiom when sampling

# Groups
MAX_ISOMORPHISM_ORDER = 64

# Genuineness
MAX_EXPLICIT_M = 12  # |Gamma^omega| = m^2 <= 144
MAX_GRID_M = 12  # Cyclic (m, a) fixture grid

# Nichols algebras
MAX_SYMMETRIZER_DEGREE = 4
DEFAULT_CARTAN_CAP = 3  # ad powers checked up to this exponent

# Sweeps
SWEEP_WORKERS = int(os.getenv("TQD_WORKERS", "1"))  # 1 = run in-process

# Logging
LOG_DIRECTORY = os.getenv("TQD_LOG_DIR", "logs")
LOG_LEVEL = os.getenv("TQD_LOG_LEVEL", "INFO")
ENABLE_FILE_LOGGING = os.getenv("TQD_FILE_LOGGING", "0") == "1"

# Import local configuration (if exists) to override any of the above
try:
    from config_local import *
except ImportError:
    pass  # Local config not found, using defaults above

"""
Toolkit settings and configuration management.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
env_path = Path(__file__).parent.parent / '.env'
load_dotenv(dotenv_path=env_path)


class Settings:
    """Toolkit configuration settings."""

    # Project paths
    BASE_DIR = Path(__file__).parent.parent
    DATA_DIR = BASE_DIR / 'data'
    CONFIG_DIR = Path(os.getenv('CONFIG_DIR', '') or (DATA_DIR / 'configurations'))

    # Parallelism (flip BFS, path enumeration, trial sweeps)
    LGTK_THREADS = max(1, int(os.getenv('LGTK_THREADS', '4')))

    # Numeric continuation (monodromy lab only; all geometry is exact)
    GAP_RATIO = float(os.getenv('GAP_RATIO', '3.0'))
    REFINE_RESIDUAL = float(os.getenv('REFINE_RESIDUAL', '1e-12'))
    TRACK_TOLERANCE = float(os.getenv('TRACK_TOLERANCE', '1e-9'))
    MIN_STEP = float(os.getenv('MIN_STEP', '1e-9'))
    TRACK_MARGIN = float(os.getenv('TRACK_MARGIN', '1e-6'))

    # Regeneration families
    S_START = float(os.getenv('S_START', '0.1'))
    S_MIN = float(os.getenv('S_MIN', '1e-3'))
    CLUSTER_SEPARATION = float(os.getenv('CLUSTER_SEPARATION', '10.0'))
    COEFF_SEED = int(os.getenv('COEFF_SEED', '2011'))
    COEFF_PERTURBATION = float(os.getenv('COEFF_PERTURBATION', '0.1'))
    RADAR_EPSILON = float(os.getenv('RADAR_EPSILON', '0.05'))
    SWEEP_DRAWS = max(1, int(os.getenv('SWEEP_DRAWS', '12')))

    # Data Layer
    GOLDEN_DB_PATH = os.getenv('GOLDEN_DB_PATH', '')  # default: BASE_DIR/data/goldens.db

    # Monitoring
    LOG_DIR = Path(os.getenv('LOG_DIR', '') or (BASE_DIR / 'logs'))
    LOG_TO_FILE = os.getenv('LOG_TO_FILE', 'true').lower() == 'true'
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    METRICS_ENABLED = os.getenv('METRICS_ENABLED', 'true').lower() == 'true'
    SLOW_OPERATION_MS = int(os.getenv('SLOW_OPERATION_MS', '10000'))


# Global settings instance
settings = Settings()

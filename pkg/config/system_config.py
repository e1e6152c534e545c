# system_config.py
# Libraries
import os


class SystemConfig:
    """
    Configuration settings for system performance related parameters.
    """
    MAX_WORKERS = max(1, (os.cpu_count() or 1) - 1)
    POOL_CHUNK_SIZE = 4
    # Largest semigroup the exhaustive isomorphism oracle accepts
    BRUTE_FORCE_LIMIT = 7
    MAX_GROUP_ORDER = 15
    # Leaf re-validation of the basis order search, switched on with ISG_VALIDATE_LEAVES=1
    VALIDATE_LEAVES = os.environ.get('ISG_VALIDATE_LEAVES', '0') == '1'

# enumeration_constants.py
class EnumerationConstants:
    FULL_MODE = 'full'
    FIXED_MODE = 'fixed'
    COUNTS_MODE = 'counts'
    MODES = (FULL_MODE, FIXED_MODE, COUNTS_MODE)
    DEFAULT_MODE = COUNTS_MODE

    # Colour tags of the idempotent colouring
    SHARED_COLOR_TAG = 0
    LONELY_COLOR_TAG = 1

    SLOW_TESTS_ENV = 'ISG_RUN_SLOW'


class ExitCodes:
    SUCCESS = 0
    INVALID_INPUT = 2
    IO_FAILURE = 3

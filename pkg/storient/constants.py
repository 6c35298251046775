class _DontChangeMe:
    MAIN_ENV_PREFIX = "STORIENT_"
    JSON_SCHEMA_VERSION = 1

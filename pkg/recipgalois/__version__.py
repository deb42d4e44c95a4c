VERSION = (0, 1, 0)

__version__ = '.'.join(map(str, VERSION))

# Bumped whenever a JSON/CSV output layout changes.
SCHEMA_VERSION = 1

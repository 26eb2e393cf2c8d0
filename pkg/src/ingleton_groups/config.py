"""Default size caps. All of them can be overridden per call or from the CLI."""

FIELD_CAP = 1024
ENUMERATION_CAP = 400
FILTER_CAP = 100_000
ORACLE_CAP = 10_000
CLOSURE_CAP = 250_000
TABLE_CAP = 6_000

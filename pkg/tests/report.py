"""Per-criterion pass/fail lines collected by the acceptance suite."""

RESULTS: list[str] = []

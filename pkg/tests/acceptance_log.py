"""Shared between the acceptance tests and the terminal summary hook."""
RESULTS = {}   # criterion number -> (passed, one-line detail)
REPORTS = {}   # criterion number -> serialized report of the first run


def record(number, passed, detail):
    RESULTS[number] = (bool(passed), detail)

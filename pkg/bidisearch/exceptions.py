# bidisearch/exceptions.py
"""
Error hierarchy shared by the engines, domains and the benchmark
"""


class SearchError(Exception):
    """Base class for every error raised by bidisearch"""


class StructuralFault(SearchError):
    """A search structure lacks a state it must contain"""


class InvariantViolation(SearchError):
    """An internal invariant did not hold"""


class DomainFault(SearchError):
    """A domain or heuristic was used outside its contract"""


class UsageError(SearchError):
    """Unknown algorithm/domain or an invalid option combination"""


class ConfigError(UsageError):
    """A settings file that cannot be read or is not a JSON object"""


class SearchTimeout(SearchError):
    """The cooperative deadline of the current run has passed"""


class InstanceFormatError(SearchError):
    """A malformed line in an instance file"""

    def __init__(self, path, line_no, message):
        self.path = str(path)
        self.line_no = line_no
        self.message = message
        super().__init__(f"{self.path}:{line_no}: {message}")

from enum import Enum, IntEnum

class OutputFormat(Enum):
    JSON = 'json'
    TEXT = 'text'

class ExitCode(IntEnum):
    OK = 0
    PROPERTY_FAILED = 1
    USAGE_ERROR = 2
    DOMAIN_ERROR = 3

"""
ConfigurationError Module.
"""


class ConfigurationError(ValueError):
    """
    Raised when a run configuration cannot be parsed or validated.

    This exception is raised when:
    - The configuration file is not valid JSON
    - A body record is malformed or has an unknown type
    - A command-line value cannot be parsed

    Args:
        message: Description of the configuration problem
    """

    def __init__(self, message: str = "Invalid configuration"):
        self.message = message
        super().__init__(self.message)

"""Any exception that can occur while running the sampling protocol."""


class ProtocolError(ValueError):
    """Session configuration or protocol state is inconsistent."""


class InputSpaceExhaustedError(ProtocolError):
    """No fresh nonzero input is left for a test round."""

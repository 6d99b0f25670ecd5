from cleo.exceptions import CleoSimpleException


class UsageError(CleoSimpleException):
    """
    Invalid or missing command line input.
    """

    pass

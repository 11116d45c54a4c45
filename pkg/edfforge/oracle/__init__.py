from edfforge import EdfForgeError


class OracleError(EdfForgeError):
    ...


class SearchLimitExceeded(OracleError):
    ...

# Errors raised by the relgap services; the CLI maps RelgapError to exit code 2


class RelgapError(Exception):
    pass


class WordSyntaxError(RelgapError):
    pass


class UnknownGeneratorError(RelgapError):
    pass


class InvalidParameterError(RelgapError):
    pass


class NotAdmissibleError(RelgapError):
    def __init__(self, ms, gcds=None):
        self.ms = list(ms)
        self.gcds = gcds or {}
        bad = ', '.join(f"gcd(q_{i}, q_{j}) = {g}" for (i, j), g in self.gcds.items() if g != 1)
        super().__init__(f"Tuple {self.ms} is not admissible" + (f" ({bad})" if bad else ""))


class CertificateError(RelgapError):
    pass


class TietzeError(RelgapError):
    pass


class SizeCapExceededError(RelgapError):
    def __init__(self, estimate: int, limit: int):
        self.estimate = estimate
        self.limit = limit
        super().__init__(f"Estimated certificate size {estimate} exceeds limit {limit}")


class UnsupportedPresentationError(RelgapError):
    pass


class SmithFormError(RelgapError):
    pass

class DisentError(Exception):
    pass


class DomainError(DisentError, ValueError):
    def __init__(self, msg, condition):
        super().__init__(msg)
        self.condition = condition


class NonFiniteError(DomainError):
    pass


class NegativeTemperatureError(DomainError):
    pass


class AsymmetricDriftError(DisentError):
    pass


class InfeasibleInvariantsError(DisentError):
    pass


class InvariantMismatchError(DisentError):
    pass


class QuadratureContractError(DisentError):
    pass


class SamplingError(DisentError):
    pass


class SweepSpecError(DisentError):
    pass


class RunFileError(DisentError):
    def __init__(self, msg, line_number=None):
        super().__init__(msg)
        self.line_number = line_number

"""Exception types shared across the package."""


class HopfcrossError(Exception):
    pass


class ShapeMismatchError(HopfcrossError):
    pass


class SingularMatrixError(HopfcrossError):
    pass


class NotConvolutionInvertibleError(HopfcrossError):
    pass


class NoAntipodeError(HopfcrossError):
    pass


class InvalidGroupTableError(HopfcrossError):
    pass


class NotCrossedProductError(HopfcrossError):
    """No unit found in some graded component.

    `definitive` is True when the absence was proved (exhaustive enumeration
    over a finite field, or the determinant polynomial was certified zero),
    False when the search budget ran out over an infinite field.
    """

    def __init__(self, message, definitive=False):
        super().__init__(message)
        self.definitive = definitive


class NoSectionFoundError(HopfcrossError):
    def __init__(self, message, definitive=False):
        super().__init__(message)
        self.definitive = definitive


class NoAlgebraSectionError(HopfcrossError):
    def __init__(self, message, definitive=False):
        super().__init__(message)
        self.definitive = definitive


class NotGroupLikeCoactionError(HopfcrossError):
    pass


class CocycleViolationError(HopfcrossError):
    pass


class NotAlgebraMapError(HopfcrossError):
    pass


class NotSquareZeroError(HopfcrossError):
    pass


class KernelNotNilpotentError(HopfcrossError):
    pass


class NotHopfModuleError(HopfcrossError):
    pass


class NotSuperCommutativeError(HopfcrossError):
    pass


class CharacteristicTwoError(HopfcrossError):
    pass


class ValidationError(HopfcrossError):
    pass


class ParseError(HopfcrossError):
    pass

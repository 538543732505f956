"""Exception hierarchy. Every error raised by the package derives from NegFontError."""


class NegFontError(ValueError):
    pass


class ZeroState(NegFontError):
    pass


class BadBitstring(NegFontError):
    pass


class DuplicateIndex(NegFontError):
    pass


class ParseError(NegFontError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class QubitOutOfRange(NegFontError):
    pass


class NotAPermutation(NegFontError):
    pass


class WrongArity(NegFontError):
    pass


class NotUnitary(NegFontError):
    pass


class OverlappingSets(NegFontError):
    pass


class IncompleteAssignment(NegFontError):
    pass


class SameQubit(NegFontError):
    pass


class NotHermitian(NegFontError):
    pass


class NoConvergence(NegFontError):
    pass


class BadK(NegFontError):
    pass


class BadPair(NegFontError):
    pass


class BadRoles(NegFontError):
    pass


class NonFinite(NegFontError):
    pass


class DegenerateFonts(NegFontError):
    pass


class UnknownQuantity(NegFontError):
    pass


class UnknownPreset(NegFontError):
    pass


class BadParams(NegFontError):
    pass

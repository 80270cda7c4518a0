"""Exception hierarchy shared by all modules."""


class PsiUmbralError(Exception):
    pass


class DivisionByZero(PsiUmbralError, ZeroDivisionError):
    pass


class PoleAtPoint(PsiUmbralError):
    pass


class ParseError(PsiUmbralError, ValueError):
    pass


class InvalidPsi(PsiUmbralError, ValueError):
    pass


class NotInRange(PsiUmbralError):
    pass


class TruncationExceeded(PsiUmbralError):
    pass


class MismatchedContext(PsiUmbralError):
    pass


class NotInvertible(PsiUmbralError):
    pass


class NotDelta(PsiUmbralError):
    pass


class CompositionDiverges(PsiUmbralError):
    pass


class Inconsistent(PsiUmbralError):
    pass


class InvalidParams(PsiUmbralError, ValueError):
    pass


class ErrataExcluded(PsiUmbralError):
    pass


class GroundTooLarge(PsiUmbralError):
    pass

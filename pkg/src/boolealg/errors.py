"""Exception hierarchy for the engine."""


class BooleAlgError(Exception):
    """Base class for every error raised by this package."""


class UnboundVariable(BooleAlgError):
    def __init__(self, name, context=None):
        self.name = name
        self.context = context
        where = f" (context: {', '.join(context)})" if context is not None else ""
        super().__init__(f"variable {name!r} is not bound{where}")


class ContextMismatch(BooleAlgError):
    """Two constituent sets (or formulas) live over different variable contexts."""


class ContextTooLarge(BooleAlgError):
    """A variable context exceeds the configured cap."""


class TooLarge(ContextTooLarge):
    """The brute-force oracle refuses contexts it cannot enumerate."""


class PolarityError(BooleAlgError):
    """An equation was given where a negated equation is required, or vice versa."""


class NoModel(BooleAlgError):
    """p = 0 has no model: every constituent belongs to C(p)."""


class ParseError(BooleAlgError, SyntaxError):
    def __init__(self, message, line=1, column=1, text=None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} at line {line}, column {column}")
        self.msg = message
        self.lineno = line
        self.offset = column
        self.text = text

    def __str__(self):
        return f"{self.message} at line {self.line}, column {self.column}"


class UnknownToken(ParseError):
    pass

"""Exception hierarchy.

Every error carries a short ``category`` string so the command line can
print one machine-parsable line per failure.
"""


class SpinLogicError(Exception):
    category = "error"


class DimensionError(SpinLogicError, ValueError):
    category = "dimension"


class MappingError(SpinLogicError, ValueError):
    category = "mapping"


class CapacityError(SpinLogicError, RuntimeError):
    category = "capacity"


class ParameterError(SpinLogicError, ValueError):
    category = "parameter"


class GateLookupError(SpinLogicError, KeyError):
    category = "lookup"

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class PartitionError(SpinLogicError, ValueError):
    category = "partition"


class RoleError(SpinLogicError, ValueError):
    category = "role"


class LocalityError(SpinLogicError, ValueError):
    category = "locality"


class NetlistError(SpinLogicError, ValueError):
    """Structural problem in a netlist (arity, undeclared output, clamps)."""

    category = "netlist"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{loc}: {message}"
        super().__init__(message)


class NetlistSyntaxError(NetlistError):
    category = "syntax"


class ArityError(NetlistError):
    category = "arity"


class DuplicateClampError(NetlistError):
    category = "clamp"


class UndeclaredOutputError(NetlistError):
    category = "undeclared"


class CompileError(SpinLogicError, ValueError):
    category = "compile"

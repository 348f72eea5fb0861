class NetcodeError(Exception):
    pass


class InputError(NetcodeError, ValueError):
    """Malformed input document; the command line maps it to exit code 2."""


class NetworkFormatError(InputError):
    pass


class CycleError(NetworkFormatError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"cycle detected: {' -> '.join(self.cycle)}")


class DuplicateLinkError(NetworkFormatError):
    def __init__(self, link_id):
        self.link_id = link_id
        super().__init__(f"duplicate link id: {link_id}")


class DanglingNodeError(NetworkFormatError):
    def __init__(self, link_id, node):
        self.link_id = link_id
        self.node = node
        super().__init__(f"link {link_id} references unknown node {node}")


class MatrixFormatError(InputError):
    pass


class CodeFormatError(InputError):
    pass


class FieldSpecError(InputError):
    pass


class FieldMismatchError(NetcodeError, ValueError):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"field mismatch: {left} vs {right}")


class ZeroInversionError(NetcodeError, ZeroDivisionError):
    pass


class CapExceededError(NetcodeError, RuntimeError):
    pass


class BudgetExceededError(CapExceededError):
    pass


class UnknownNodeError(NetcodeError, KeyError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"unknown node: {node}")


class MaxflowDeficitError(NetcodeError, RuntimeError):
    def __init__(self, node, maxflow, dimension):
        self.node = node
        self.maxflow = maxflow
        self.dimension = dimension
        super().__init__(f"maxflow deficit at {node}: {maxflow} < {dimension}")


class ReceiverOrderError(NetcodeError, ValueError):
    pass


class GroundSetError(NetcodeError, ValueError):
    def __init__(self, elements):
        self.elements = tuple(sorted(map(str, elements)))
        super().__init__(f"elements not in ground set: {', '.join(self.elements)}")


class FieldTooSmallError(NetcodeError, ValueError):
    def __init__(self, order, receivers):
        self.order = order
        self.receivers = receivers
        super().__init__(f"field too small: q={order} must exceed {receivers} receivers")


class ConstructionError(NetcodeError, RuntimeError):
    def __init__(self, link, reason=None):
        self.link = link
        super().__init__(reason or f"no admissible coefficient vector for link {link}")


class NotGraphicError(NetcodeError, ValueError):
    pass


class KernelRecoveryError(NetcodeError, ValueError):
    def __init__(self, node, link=None):
        self.node = node
        self.link = link
        super().__init__(f"local kernels not recoverable at node {node} (link {link})")


class LiftPostconditionError(NetcodeError, RuntimeError):
    pass

"""Exception hierarchy for irrlab.

Every error is a ``ValueError`` subclass so callers that only care about
"bad input" can catch one thing.
"""


class IrrlabError(ValueError):
    pass


# graph construction / codecs
class LoopEdge(IrrlabError):
    pass


class IndexOutOfRange(IrrlabError):
    pass


class DuplicateEdge(IrrlabError):
    pass


class MalformedGraph6(IrrlabError):
    pass


class MalformedEdgeList(IrrlabError):
    pass


class UnsupportedOrder(IrrlabError):
    pass


class OrderTooLarge(IrrlabError):
    pass


# irregularity
class NotSorted(IrrlabError):
    pass


class EdgePresent(IrrlabError):
    pass


class EdgeAbsent(IrrlabError):
    pass


# degree sequences
class NotGraphical(IrrlabError):
    pass


class NotTreeSequence(IrrlabError):
    pass


class OrderTooSmall(IrrlabError):
    pass


# extremal
class OverflowGuard(IrrlabError):
    pass


class InvalidQ(IrrlabError):
    pass


class InvalidSpec(IrrlabError):
    pass


class NotATree(IrrlabError):
    pass


class AlreadyStar(IrrlabError):
    pass


# oracle
class OrderGuard(IrrlabError):
    pass

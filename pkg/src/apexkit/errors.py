"""Exception types shared across the library."""


class ApexkitError(Exception):
    """Base class for all library-specific errors."""


class MalformedGraph6(ApexkitError):
    """Input is not a legal single-byte-header graph6 word."""


class EdgeAbsent(ApexkitError):
    """An edge operation named a non-edge."""


class VertexAbsent(ApexkitError):
    """A vertex index outside 0..n-1."""


class NotATwoCut(ApexkitError):
    """The given pair does not disconnect the graph."""


class HeavyAmbiguous(ApexkitError):
    """Kuratowski witnesses for the two cut vertices land in different
    components, so no side can be called heavy.  Signals a non-obstruction
    input."""


class NotConnectivity2(ApexkitError):
    """Operation requires vertex connectivity exactly 2."""


class NotClassifiable(ApexkitError):
    """Classification precondition violated."""


class ConfigInvalid(ApexkitError):
    """Search configuration outside its documented ranges."""

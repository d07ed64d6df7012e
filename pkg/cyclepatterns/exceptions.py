# -*- coding: utf-8 -*-


class CyclePatternsError(Exception):
    """Base class for every error raised by cyclepatterns"""
    exit_code = 1

    def __init__(self, msg):
        Exception.__init__(self, msg)
        self._msg = msg

    def __str__(self):
        return "%s" % self._msg


class InvalidInput(CyclePatternsError, ValueError):
    """Malformed permutation, pattern or pattern set"""
    exit_code = 2


class UnknownIdentifier(InvalidInput):
    """A formula id or suite id that is not registered"""

    def __init__(self, kind, ident, known=()):
        InvalidInput.__init__(self, "unknown %s id %r" % (kind, ident))
        self._kind = kind
        self._ident = ident
        self._known = tuple(known)

    def __str__(self):
        if not self._known:
            return self._msg
        return "%s (expected one of: %s)" % (self._msg, ", ".join(self._known))


class PreconditionError(CyclePatternsError, ValueError):
    """A series operation was called outside its domain"""
    exit_code = 2


class IntegralityError(PreconditionError):
    """A rational intermediate did not clear to an integer polynomial"""

    def __init__(self, msg, n=None):
        PreconditionError.__init__(self, msg)
        self._n = n

    def __str__(self):
        if self._n is None:
            return self._msg
        return "%s (term n=%d)" % (self._msg, self._n)


class ResourceLimitExceeded(CyclePatternsError):
    """An enumeration was requested above the configured caps"""
    exit_code = 3

    def __init__(self, what, requested, limit):
        CyclePatternsError.__init__(self, "%s %d exceeds the configured limit %d" % (what, requested, limit))
        self.requested = requested
        self.limit = limit

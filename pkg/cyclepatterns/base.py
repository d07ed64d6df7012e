# -*- coding: utf-8 -*-


class CombinatorialBase(object):
    """
    Immutable value object. Subclasses keep their identifying data in
    ``self.id``; equality and hashing derive from it.
    """
    def __init__(self):
        self.id = None

    def __hash__(self):
        class_name = type(self).__name__
        return hash(class_name) ^ hash(self.id)

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self.id == other.id
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

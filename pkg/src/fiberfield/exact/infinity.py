"""The point at infinity of the projective line."""


class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = object.__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "oo"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("fiberfield.INF")

    def __reduce__(self):
        return (_Infinity, ())

    def sort_key(self):
        return (float("inf"),)


INF = _Infinity()


def is_inf(x):
    return x is INF

"""Exception types shared across the package."""


class AF2Error(Exception):
    """Base class for all domain errors."""


class NotPrimitive(AF2Error):
    """The word is not a primitive element of F2."""


class NotAnEdge(AF2Error):
    """The vertex pair does not generate F2 as a free product."""


class NotACEdge(AF2Error):
    """The vertex pair is not a 1-conjugate (C-edge) pair."""


class NotConjugate(AF2Error):
    """The two words are not conjugate in F2."""


class NotDistanceTwo(AF2Error):
    """The vertices are not at C-distance exactly 2."""


class NotACPath(AF2Error):
    """Consecutive entries of the sequence are not C-edges."""


class LevelCapExceeded(AF2Error):
    """Requested extension level exceeds the configured cap."""


class TileUndefined(AF2Error):
    """tile length is undefined for this input (b^{+-1})."""


class ClassIsBaseB(AF2Error):
    """The operation excludes the conjugacy class of b."""


class NotASubstructure(AF2Error):
    """The first structure does not embed component-wise into the second."""


class NotStrong(AF2Error):
    """The embedding is not strong."""


class PathNotInStructure(AF2Error):
    """Some edge of the path is missing from the structure."""


class UnknownSuite(AF2Error):
    """No verification suite registered under that name."""

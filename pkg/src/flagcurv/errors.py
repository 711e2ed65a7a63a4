"""Exception types shared across the package."""


class FlagcurvError(Exception):
    """Base class for all errors raised by this package."""


class ZeroVector(FlagcurvError):
    """A direction argument is (numerically) the zero vector."""


class InvalidZermelo(FlagcurvError):
    """Zermelo data violates an invariant (h not SPD, or h(W,W) too close to 1)."""


class InvalidRanders(FlagcurvError):
    """Randers data violates an invariant (g not SPD, or |B|_g too close to 1)."""


class NotInSigmaTangent(FlagcurvError):
    """A vector required to lie in the indicatrix tangent plane fails the orthogonality test."""


class RankDeficient(FlagcurvError):
    """The immersion Jacobian is rank-deficient at the evaluation point."""


class DegeneratePlane(FlagcurvError):
    """The two given tangent vectors do not span a 2-plane."""


class CodimensionNotOne(FlagcurvError):
    """A hypersurface-only operation was called on a submanifold of codimension != 1."""


class MissingThirdDerivative(FlagcurvError):
    """Third derivatives of the immersion are needed but were not provided."""


class DegenerateFlag(FlagcurvError):
    """The flag (v, u) is degenerate: L(v) g_v(u,u) - g_v(v,u)^2 vanishes."""


class NotOnIndicatrix(FlagcurvError):
    """The given point does not lie on the unit level set of the norm."""


class SingularGram(FlagcurvError):
    """A Gram matrix that should be positive definite failed to factorize."""


class ConfigError(FlagcurvError):
    """A run configuration is invalid; the message names the offending field."""

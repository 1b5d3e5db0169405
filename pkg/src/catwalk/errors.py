"""Exception types shared across the package."""


class CatwalkError(Exception):
    """Base class for all package errors."""


class NotLoxodromic(CatwalkError):
    """Axis or translation data requested for an element with zero translation length."""


class PrefixTooShallow(CatwalkError):
    """A boundary prefix is too short to determine the requested quantity."""


class Unstable(CatwalkError):
    """A boundary estimate did not settle within its stability window."""


class TooShort(CatwalkError):
    """Closed-geodesic occupation requested at a depth exceeding the translation length."""


class NonConvergence(CatwalkError):
    """Fixed-point iteration failed to reach the residual gate within the cap."""


class ValidationFailed(CatwalkError):
    """A derived object failed its mandatory validation gate."""

    def __init__(self, msg, offender=None):
        super().__init__(msg)
        self.offender = offender


class DepthInsufficient(CatwalkError):
    """Cylinder case analysis needs masses deeper than the measure provides."""


class DisksOverlap(CatwalkError):
    """Two ping-pong disks intersect."""

    def __init__(self, i, j):
        super().__init__(f"disks {i} and {j} overlap")
        self.pair = (i, j)


class MappingViolation(CatwalkError):
    """A generator fails to map its source disk exterior into its target disk."""

    def __init__(self, generator, witness):
        super().__init__(f"generator {generator}: witness point {witness} lands outside target disk")
        self.generator = generator
        self.witness = witness


class IterationLimit(CatwalkError):
    """Fundamental-domain reduction exceeded its iteration cap (numerical degeneracy)."""


class BaseNotOnGeodesic(CatwalkError):
    """Base point for a geodesic parametrization is not on the geodesic."""


class ChartMismatch(CatwalkError):
    """Two measures live on different charts or depths and cannot be compared."""


class ConfigError(CatwalkError):
    """Config file could not be parsed; carries a line number."""

    def __init__(self, msg, line=None):
        loc = f"line {line}: " if line is not None else ""
        super().__init__(f"{loc}{msg}")
        self.line = line

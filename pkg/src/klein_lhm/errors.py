"""Exception hierarchy shared by the compute modules and the CLI."""


class DomainError(ValueError):
    """Input lies outside the region where a formula is defined."""


class ResonanceError(DomainError):
    """Lossless permeability evaluated exactly at its magnetic resonance."""


class InterfacePoleError(DomainError):
    """Coefficient denominator vanishes at the interface."""


class RegimeBoundaryError(DomainError):
    """Potential sits exactly on V = E - mc^2 or V = E + mc^2."""


class SamplingError(ValueError):
    """Spatial grid too coarse for the shortest wavelength present."""


class UndefinedAxisError(ValueError):
    """Density has no preferred direction to measure."""


class ConfigError(ValueError):
    """Bad key or value in a run configuration."""

    def __init__(self, key, message):
        super().__init__(f"{key}: {message}")
        self.key = key

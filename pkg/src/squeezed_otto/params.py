"""Engine parameters and the derived dimensionless quantities.

Units: angular frequencies in rad/s, energies in peV, inverse temperatures
in 1/peV (Boltzmann constant absorbed into beta).
"""
from dataclasses import dataclass, field
import math

from .errors import ValidationError

HBAR = 6.582119569e-4  # peV * s

NMR_FREQ_C_KHZ = 2.5
NMR_OMEGA_RATIO = 10.0
NMR_ENERGY_SCALE_PEV = 10.0
NMR_BETA_RATIO = 0.7


def _check_finite(name, value):
    if not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ValidationError(f"{name} must be a finite real number, got {value!r}", field=name)


@dataclass(frozen=True)
class EngineParams:
    """Frequencies, inverse temperatures and squeezing of one engine.

    Parameters
    ----------
    omega_c, omega_h : float
        Cold and hot level splittings (rad/s), ``omega_h > omega_c > 0``.
    beta_c, beta_h : float
        Inverse temperatures of the cold and hot reservoirs (1/peV).
    r : float
        Squeezing parameter of the hot reservoir, ``r >= 0``.
    """

    omega_c: float
    omega_h: float
    beta_c: float
    beta_h: float
    r: float = 0.0

    def __post_init__(self):
        for name in ("omega_c", "omega_h", "beta_c", "beta_h", "r"):
            _check_finite(name, getattr(self, name))
        if not self.omega_c > 0:
            raise ValidationError("omega_c must be positive", field="omega_c")
        if not self.omega_h > self.omega_c:
            raise ValidationError("omega_h must exceed omega_c", field="omega_h")
        if not self.beta_c > 0:
            raise ValidationError("beta_c must be positive", field="beta_c")
        if not self.beta_h > 0:
            raise ValidationError("beta_h must be positive", field="beta_h")
        if not self.r >= 0:
            raise ValidationError("r must be non-negative", field="r")

    @property
    def beta_ratio(self):
        return self.beta_h / self.beta_c

    @property
    def omega_ratio(self):
        return self.omega_h / self.omega_c

    def replace(self, **changes):
        values = {k: getattr(self, k) for k in ("omega_c", "omega_h", "beta_c", "beta_h", "r")}
        values.update(changes)
        return EngineParams(**values)


@dataclass(frozen=True)
class DerivedParams:
    theta_c: float
    theta_h: float
    zeta: float
    mu: float
    nu: float
    notes: tuple = field(default=())


def zeta_of(r):
    """Polarization reduction ``1/(mu^2 + nu^2)^2 = sech^2(2r)``."""
    # cosh(2r) = mu^2 + nu^2; written this way it stays finite for large r
    c = math.cosh(2.0 * r) if r < 350.0 else math.inf
    return 1.0 / (c * c)


def theta(beta, omega):
    """Dimensionless temperature ``beta * hbar * omega / 2``."""
    return 0.5 * beta * HBAR * omega


def derive(p):
    if not isinstance(p, EngineParams):
        raise ValidationError("derive expects an EngineParams record")
    notes = ()
    if p.beta_h >= p.beta_c:
        notes = ("beta_h >= beta_c: hot reservoir is not hotter than the cold one",)
    return DerivedParams(
        theta_c=theta(p.beta_c, p.omega_c),
        theta_h=theta(p.beta_h, p.omega_h),
        zeta=zeta_of(p.r),
        mu=math.cosh(p.r),
        nu=math.sinh(p.r),
        notes=notes,
    )


def from_lab_units(freq_c_khz, ratio, energy_scale_pev, beta_ratio, r=0.0):
    """Build :class:`EngineParams` from laboratory quantities.

    ``freq_c_khz`` is an ordinary frequency, ``ratio`` is ``omega_h/omega_c``,
    ``energy_scale_pev`` is ``k_B T_c`` and ``beta_ratio`` is ``beta_h/beta_c``.
    """
    for name, value in (("freq_c_khz", freq_c_khz), ("ratio", ratio),
                        ("energy_scale_pev", energy_scale_pev), ("beta_ratio", beta_ratio), ("r", r)):
        _check_finite(name, value)
    if freq_c_khz <= 0:
        raise ValidationError("freq_c_khz must be positive", field="freq_c_khz")
    if ratio <= 1:
        raise ValidationError("ratio must exceed 1 (omega_h > omega_c)", field="ratio")
    if energy_scale_pev <= 0:
        raise ValidationError("energy_scale_pev must be positive", field="energy_scale_pev")
    if beta_ratio <= 0:
        raise ValidationError("beta_ratio must be positive", field="beta_ratio")
    omega_c = 2.0 * math.pi * freq_c_khz * 1e3
    beta_c = 1.0 / energy_scale_pev
    return EngineParams(omega_c=omega_c, omega_h=ratio * omega_c,
                        beta_c=beta_c, beta_h=beta_ratio * beta_c, r=float(r))


def nmr_params(r=0.0):
    """The NMR parameter set used throughout as the default."""
    return from_lab_units(NMR_FREQ_C_KHZ, NMR_OMEGA_RATIO, NMR_ENERGY_SCALE_PEV, NMR_BETA_RATIO, r)

"""Physical constants and unit conversions.

Everything inside the package runs in Hartree atomic units (hartree, bohr,
electron mass, atomic time unit); the CLI converts user-facing quantities
(angstrom, fs, K, amu) at the I/O boundary.  CODATA 2018 values.
"""

BOHR_PER_ANGSTROM = 1.0 / 0.529177210903
ANGSTROM_PER_BOHR = 0.529177210903

# 1 atomic time unit in femtoseconds
FS_PER_ATU = 2.4188843265857e-2
ATU_PER_FS = 1.0 / FS_PER_ATU

# Boltzmann constant in hartree / K
KB_HARTREE_PER_K = 3.166811563e-6

# electron masses per unified atomic mass unit
ME_PER_AMU = 1822.888486209

# spectroscopic wavenumber of 1 hartree (E = hc * nu_tilde)
WAVENUMBER_PER_HARTREE = 219474.6313632

# standard atomic weights (amu), isotope-averaged
ATOMIC_WEIGHTS = {1: 1.008, 2: 4.002602}
ELEMENT_SYMBOLS = {"H": 1, "HE": 2}


def angstrom_to_bohr(x):
    return x * BOHR_PER_ANGSTROM


def bohr_to_angstrom(x):
    return x * ANGSTROM_PER_BOHR


def fs_to_atu(t):
    return t * ATU_PER_FS


def atu_to_fs(t):
    return t * FS_PER_ATU


def amu_to_me(m):
    return m * ME_PER_AMU


def inverse_temperature(temperature_K: float) -> float:
    """beta = 1/(k_B T) in 1/hartree."""
    if temperature_K <= 0:
        raise ValueError(f"temperature must be positive, got {temperature_K}")
    return 1.0 / (KB_HARTREE_PER_K * temperature_K)


def angular_frequency_to_wavenumber(omega_au: float) -> float:
    """Angular frequency (1/atu) to spectroscopic wavenumber (1/cm)."""
    return omega_au * WAVENUMBER_PER_HARTREE

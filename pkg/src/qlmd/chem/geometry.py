"""Molecular geometry containers and JSON input parsing."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError
from ..units import ATOMIC_WEIGHTS, ELEMENT_SYMBOLS, ME_PER_AMU, angstrom_to_bohr


@dataclass(frozen=True)
class Atom:
    atomic_number: int
    mass_amu: float
    position: np.ndarray  # bohr, shape (3,)

    def __post_init__(self):
        if self.atomic_number < 1:
            raise ValueError(f"atomic number must be >= 1, got {self.atomic_number}")
        if self.mass_amu <= 0:
            raise ValueError(f"mass must be positive, got {self.mass_amu}")
        object.__setattr__(self, "position",
                           np.asarray(self.position, dtype=float).reshape(3))


@dataclass(frozen=True)
class MolecularGeometry:
    atoms: tuple[Atom, ...]
    charge: int = 0
    n_electrons: int = field(init=False)

    def __post_init__(self):
        n = sum(a.atomic_number for a in self.atoms) - self.charge
        if n <= 0:
            raise ValueError(f"no electrons: charge {self.charge} too large")
        if n % 2 != 0:
            raise ValueError(
                f"odd electron count {n}: only closed-shell systems are supported")
        object.__setattr__(self, "n_electrons", n)

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    @property
    def positions(self) -> np.ndarray:
        return np.array([a.position for a in self.atoms])

    @property
    def masses_amu(self) -> np.ndarray:
        return np.array([a.mass_amu for a in self.atoms])

    @property
    def masses_au(self) -> np.ndarray:
        return self.masses_amu * ME_PER_AMU

    @property
    def atomic_numbers(self) -> tuple[int, ...]:
        return tuple(a.atomic_number for a in self.atoms)

    def with_positions(self, positions: np.ndarray) -> "MolecularGeometry":
        positions = np.asarray(positions, dtype=float).reshape(self.n_atoms, 3)
        return MolecularGeometry(
            atoms=tuple(Atom(a.atomic_number, a.mass_amu, p)
                        for a, p in zip(self.atoms, positions)),
            charge=self.charge)

    def to_dict(self) -> dict:
        return {
            "atoms": [{"Z": a.atomic_number, "mass_amu": a.mass_amu,
                       "xyz_bohr": a.position.tolist()} for a in self.atoms],
            "charge": self.charge,
        }


def geometry_from_dict(data: dict) -> MolecularGeometry:
    """Parse {atoms: [{element, mass_amu?, xyz_angstrom}], charge} input."""
    try:
        atoms = []
        for i, spec in enumerate(data["atoms"]):
            symbol = str(spec["element"]).upper()
            if symbol not in ELEMENT_SYMBOLS:
                raise ConfigError(f"atoms[{i}]: unknown element {spec['element']!r}")
            z = ELEMENT_SYMBOLS[symbol]
            mass = float(spec.get("mass_amu", ATOMIC_WEIGHTS[z]))
            xyz = angstrom_to_bohr(np.asarray(spec["xyz_angstrom"], dtype=float))
            atoms.append(Atom(z, mass, xyz))
        charge = int(data.get("charge", 0))
    except KeyError as exc:
        raise ConfigError(f"geometry input missing key {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid geometry input: {exc}") from exc
    try:
        return MolecularGeometry(atoms=tuple(atoms), charge=charge)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def load_geometry(path) -> MolecularGeometry:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
    return geometry_from_dict(data)


def hydrogen_molecule(bond_angstrom: float) -> MolecularGeometry:
    """H2 along z with the bond midpoint at the origin."""
    half = angstrom_to_bohr(bond_angstrom) / 2.0
    m = ATOMIC_WEIGHTS[1]
    return MolecularGeometry(atoms=(
        Atom(1, m, np.array([0.0, 0.0, -half])),
        Atom(1, m, np.array([0.0, 0.0, half])),
    ))

"""Arrangements: assignments of container ids to bay cells, plus their checks.

An arrangement is the chromosome of the search: a 3D grid holding a container
id in each occupied cell and 0 elsewhere. The genetic operators all permute
ids over a fixed set of occupied cells (the canonical fill pattern), which
keeps the stacking constraints satisfied by construction; `validate` checks
them independently anyway and reports violations as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .bay import BayDims, Cell, scan_coords
from .errors import CapacityExceeded, CellEmpty, ShapeMismatch
from .instances import Instance

EMPTY = 0  # grid value marking an unoccupied cell


@dataclass(frozen=True, eq=False)
class Arrangement:
    """Container ids on the bay grid; ``grid[x, y, z] == 0`` marks an empty cell."""

    dims: BayDims
    grid: np.ndarray

    def __post_init__(self) -> None:
        expected = (self.dims.n1, self.dims.n2, self.dims.n3)
        grid = np.ascontiguousarray(self.grid, dtype=np.int64)
        if grid.shape != expected:
            raise ValueError(f"grid shape {grid.shape} does not match dims {expected}")
        grid.setflags(write=False)
        object.__setattr__(self, "grid", grid)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.dims == other.dims and np.array_equal(self.grid, other.grid)

    @property
    def n_containers(self) -> int:
        return int(np.count_nonzero(self.grid))

    def occupant(self, cell: Cell) -> int | None:
        """Container id at `cell`, or None if the cell is empty."""
        value = int(self.grid[cell])
        return value if value != EMPTY else None

    def scan_vector(self) -> np.ndarray:
        """Grid values in scan order; length equals the bay capacity."""
        return self.grid.transpose(2, 0, 1).ravel()

    def id_sequence(self) -> np.ndarray:
        """Ids of the occupied cells in scan order."""
        vector = self.scan_vector()
        return vector[vector != EMPTY]

    def occupied_cells(self) -> Iterator[tuple[Cell, int]]:
        """(cell, id) pairs for occupied cells, in scan order."""
        xs, ys, zs = scan_coords(self.dims)
        vector = self.scan_vector()
        for k in np.flatnonzero(vector):
            yield Cell(int(xs[k]), int(ys[k]), int(zs[k])), int(vector[k])

    @classmethod
    def from_scan_vector(cls, dims: BayDims, vector: Sequence[int] | np.ndarray) -> Arrangement:
        """Build from a full-length scan-order vector (zeros where empty)."""
        flat = np.asarray(vector, dtype=np.int64)
        if flat.shape != (dims.capacity,):
            raise ValueError(f"scan vector must have length {dims.capacity}, got {flat.shape}")
        grid = flat.reshape(dims.n3, dims.n1, dims.n2).transpose(1, 2, 0)
        return cls(dims, grid)

    @classmethod
    def from_id_sequence(cls, dims: BayDims, sequence: Sequence[int] | np.ndarray) -> Arrangement:
        """Place `sequence` into the first cells of scan order (canonical occupancy)."""
        seq = np.asarray(sequence, dtype=np.int64)
        if seq.size > dims.capacity:
            raise CapacityExceeded(f"{seq.size} ids exceed bay capacity {dims.capacity}")
        full = np.zeros(dims.capacity, dtype=np.int64)
        full[: seq.size] = seq
        return cls.from_scan_vector(dims, full)


@dataclass(frozen=True)
class Violation:
    """One broken constraint, naming the offending cell or floor."""

    constraint: str  # "permutation" | "support" | "floor-monotonicity" | "occupancy"
    where: str
    detail: str

    def __str__(self) -> str:
        return f"{self.constraint} violation at {self.where}: {self.detail}"


def canonical_fill(instance: Instance) -> Arrangement:
    """Place ids 1..Nc into the first Nc cells of scan order."""
    nc = instance.n_containers
    if nc > instance.dims.capacity:
        raise CapacityExceeded(
            f"{nc} containers exceed bay capacity {instance.dims.capacity}"
        )
    return Arrangement.from_id_sequence(instance.dims, np.arange(1, nc + 1, dtype=np.int64))


def shuffle_ids(arr: Arrangement, rng: np.random.Generator, swaps: int) -> Arrangement:
    """Apply `swaps` random transpositions of ids between occupied cells.

    The occupancy pattern is untouched; only which id sits where changes.
    Both cells of a transposition are drawn uniformly and independently, so a
    draw may hit the same cell twice and leave the arrangement unchanged.
    """
    if swaps < 0:
        raise ValueError(f"swaps must be >= 0, got {swaps}")
    vector = arr.scan_vector().copy()
    occupied = np.flatnonzero(vector)
    if swaps == 0 or occupied.size < 1:
        return arr
    pairs = rng.integers(0, occupied.size, size=(swaps, 2))
    for a, b in pairs:
        ia, ib = occupied[a], occupied[b]
        vector[ia], vector[ib] = vector[ib], vector[ia]
    return Arrangement.from_scan_vector(arr.dims, vector)


def above_count(arr: Arrangement, cell: Cell) -> int:
    """Number of occupied cells above `cell` in its column."""
    cell = Cell(*cell)
    if not arr.dims.contains(cell):
        raise ValueError(f"cell {tuple(cell)} outside bay {arr.dims}")
    x, y, z = cell
    if arr.grid[x, y, z] == EMPTY:
        raise CellEmpty(f"cell {tuple(cell)} is empty")
    return int(np.count_nonzero(arr.grid[x, y, z + 1 :]))


def validate(arr: Arrangement, instance: Instance) -> list[Violation]:
    """Check every structural invariant; an empty report means the arrangement is valid.

    Violations are data, not errors: each entry names the broken constraint
    and the offending cell or floor. Checked independently of each other:
    the id permutation, support (no floating containers), floor counts
    non-increasing with height, and the canonical occupancy pattern.
    """
    if arr.dims != instance.dims:
        raise ShapeMismatch(f"arrangement dims {arr.dims} != instance dims {instance.dims}")
    dims = arr.dims
    nc = instance.n_containers
    occupied = arr.grid != EMPTY
    violations: list[Violation] = []

    ids = arr.grid[occupied]
    values, counts = np.unique(ids, return_counts=True)
    for value, count in zip(values, counts):
        if count > 1:
            violations.append(
                Violation("permutation", f"id {value}", f"appears in {count} cells")
            )
        if not 1 <= value <= nc:
            violations.append(
                Violation("permutation", f"id {value}", "not part of the instance")
            )
    for missing in sorted(set(range(1, nc + 1)) - set(values.tolist())):
        violations.append(Violation("permutation", f"id {missing}", "placed nowhere"))

    floating = occupied[:, :, 1:] & ~occupied[:, :, :-1]
    for x, y, z in np.argwhere(floating):
        violations.append(
            Violation("support", f"cell ({x}, {y}, {z + 1})", "occupied cell with empty cell below")
        )

    floor_counts = occupied.sum(axis=(0, 1))
    for j in range(dims.n3 - 1):
        if floor_counts[j] < floor_counts[j + 1]:
            violations.append(
                Violation(
                    "floor-monotonicity",
                    f"floor {j}",
                    f"holds {floor_counts[j]} containers, floor {j + 1} holds {floor_counts[j + 1]}",
                )
            )

    occupied_scan = occupied.transpose(2, 0, 1).ravel()
    canonical = np.arange(dims.capacity) < nc
    xs, ys, zs = scan_coords(dims)
    for k in np.flatnonzero(occupied_scan & ~canonical):
        violations.append(
            Violation(
                "occupancy",
                f"cell ({xs[k]}, {ys[k]}, {zs[k]})",
                "occupied outside the canonical fill pattern",
            )
        )
    for k in np.flatnonzero(canonical & ~occupied_scan):
        violations.append(
            Violation(
                "occupancy",
                f"cell ({xs[k]}, {ys[k]}, {zs[k]})",
                "canonical fill cell left empty",
            )
        )

    return violations

"""Evolution engine: roulette selection, box crossover, swap mutation, elitism.

Each generation draws parents by roulette wheel over weights 1 / (1 + F)
(small F means fit, weights stay finite at F = 0), produces exactly N
offspring through crossover or copy plus optional mutation, merges them with
the N incumbents, and keeps the best N of the 2N merged individuals. The
merge step makes the best fitness non-increasing from one generation to the
next.

The crossover operator cuts an axis-aligned box out of the bay: the child
keeps the first parent's ids inside the box and fills the remaining cells,
in scan order, with the absent ids in the order they appear in the second
parent. Internally individuals are stored as id sequences over the canonical
scan order, which turns all operators into flat array operations; the public
operators accept and return `Arrangement` values and share the same core, so
a run is reproducible whether it is driven by `run` or stepped manually.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from ._rng import mask_seed
from .arrangement import Arrangement, validate
from .bay import BayDims, canonical_above_counts, scan_coords
from .errors import EmptyPopulation, InvalidArrangement, ShapeMismatch
from .instances import Instance


@dataclass(frozen=True)
class GaConfig:
    """Engine parameters; `init_swaps=None` means one transposition per container."""

    pop_size: int = 50
    generations: int = 100
    crossover_prob: float = 0.8
    mutation_prob: float = 0.1
    seed: int = 0
    init_swaps: int | None = None
    validate_every_individual: bool = False

    def __post_init__(self) -> None:
        if self.pop_size < 1:
            raise ValueError(f"pop_size must be >= 1, got {self.pop_size}")
        if self.generations < 1:
            raise ValueError(f"generations must be >= 1, got {self.generations}")
        for name in ("crossover_prob", "mutation_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {p}")
        if self.init_swaps is not None and self.init_swaps < 0:
            raise ValueError(f"init_swaps must be >= 0, got {self.init_swaps}")


@dataclass(frozen=True)
class CrossoverPlanes:
    """Cut positions along each axis; the kept box is {x < px, y < py, z < pz}."""

    px: int
    py: int
    pz: int


@dataclass(frozen=True)
class GenerationRecord:
    generation: int
    best_fitness: float
    mean_fitness: float
    elapsed_ms: float


@dataclass(frozen=True)
class RunStats:
    """Per-generation history of a run plus the best arrangement found."""

    records: tuple[GenerationRecord, ...]
    best: Arrangement
    best_fitness: float

    @property
    def initial_best(self) -> float:
        """Best fitness in the first generation (the initial population)."""
        return self.records[0].best_fitness

    @property
    def final_best(self) -> float:
        """Best fitness in the last generation."""
        return self.records[-1].best_fitness

    @property
    def total_elapsed_ms(self) -> float:
        return sum(r.elapsed_ms for r in self.records)


@dataclass(frozen=True)
class _Context:
    """Per-instance constants the engine core works against."""

    dims: BayDims
    nc: int
    priorities: np.ndarray  # indexed by id - 1
    above: np.ndarray  # rehandles per occupied scan position under canonical fill
    xs: np.ndarray  # coordinates of the occupied scan positions
    ys: np.ndarray
    zs: np.ndarray


def _context(instance: Instance) -> _Context:
    dims = instance.dims
    nc = instance.n_containers
    xs, ys, zs = scan_coords(dims)
    return _Context(
        dims,
        nc,
        instance.priority_vector(),
        canonical_above_counts(dims, nc),
        xs[:nc],
        ys[:nc],
        zs[:nc],
    )


def _batch_fitness(seqs: np.ndarray, ctx: _Context) -> np.ndarray:
    """Fitness of each row of an id-sequence matrix."""
    if ctx.nc == 0:
        return np.zeros(len(seqs))
    return ctx.priorities[seqs - 1] @ ctx.above


def _order_fill(keep: np.ndarray, donor: np.ndarray, region: np.ndarray, mark: np.ndarray) -> np.ndarray:
    """Child sequence: `keep`'s ids inside the region, absent ids in donor order elsewhere."""
    child = keep.copy()
    mark[:] = False
    mark[keep[region]] = True
    child[~region] = donor[~mark[donor]]
    return child


def _init_seqs(ctx: _Context, cfg: GaConfig, rng: np.random.Generator) -> np.ndarray:
    """Population matrix: canonical order per row, then `init_swaps` transpositions."""
    swaps = cfg.init_swaps if cfg.init_swaps is not None else ctx.nc
    seqs = np.tile(np.arange(1, ctx.nc + 1, dtype=np.int64), (cfg.pop_size, 1))
    if swaps and ctx.nc:
        for row in seqs:
            pairs = rng.integers(0, ctx.nc, size=(swaps, 2))
            for a, b in pairs:
                row[a], row[b] = row[b], row[a]
    return seqs


def _step_seqs(
    seqs: np.ndarray,
    fits: np.ndarray,
    ctx: _Context,
    cfg: GaConfig,
    rng: np.random.Generator,
    check=None,
) -> tuple[np.ndarray, np.ndarray]:
    """One generation over the sequence matrix; returns (population, fitness) sorted ascending."""
    n = cfg.pop_size
    n_pairs = (n + 1) // 2
    weights = 1.0 / (1.0 + fits)
    cumulative = np.cumsum(weights)
    draws = rng.random((n_pairs, 2)) * cumulative[-1]
    parents = np.minimum(np.searchsorted(cumulative, draws, side="right"), n - 1)
    do_crossover = rng.random(n_pairs) < cfg.crossover_prob
    plane_highs = (ctx.dims.n1 + 1, ctx.dims.n2 + 1, ctx.dims.n3 + 1)
    planes = rng.integers(1, plane_highs, size=(n_pairs, 3))

    children = np.empty((2 * n_pairs, ctx.nc), dtype=np.int64)
    mark = np.zeros(ctx.nc + 1, dtype=bool)
    for p in range(n_pairs):
        i, j = parents[p]
        if do_crossover[p]:
            region = (ctx.xs < planes[p, 0]) & (ctx.ys < planes[p, 1]) & (ctx.zs < planes[p, 2])
            children[2 * p] = _order_fill(seqs[i], seqs[j], region, mark)
            children[2 * p + 1] = _order_fill(seqs[j], seqs[i], region, mark)
        else:
            children[2 * p] = seqs[i]
            children[2 * p + 1] = seqs[j]
    offspring = children[:n]

    mutate_flags = rng.random(n) < cfg.mutation_prob
    if ctx.nc:
        swap_idx = rng.integers(0, ctx.nc, size=(n, 2))
        rows = np.flatnonzero(mutate_flags)
        a, b = swap_idx[rows, 0], swap_idx[rows, 1]
        held = offspring[rows, a].copy()
        offspring[rows, a] = offspring[rows, b]
        offspring[rows, b] = held

    if check is not None:
        check(offspring)

    merged = np.concatenate([seqs, offspring])
    merged_fits = np.concatenate([fits, _batch_fitness(offspring, ctx)])
    order = np.argsort(merged_fits, kind="stable")[:n]
    return merged[order], merged_fits[order]


def _debug_check(instance: Instance):
    def check(seqs: np.ndarray) -> None:
        for seq in seqs:
            arr = Arrangement.from_id_sequence(instance.dims, seq)
            violations = validate(arr, instance)
            if violations:
                raise InvalidArrangement(violations)

    return check


def init_population(instance: Instance, cfg: GaConfig, rng: np.random.Generator) -> list[Arrangement]:
    """N arrangements, each a shuffled canonical fill; all satisfy the constraints."""
    ctx = _context(instance)
    seqs = _init_seqs(ctx, cfg, rng)
    if cfg.validate_every_individual:
        _debug_check(instance)(seqs)
    return [Arrangement.from_id_sequence(instance.dims, s) for s in seqs]


def roulette_select(fitnesses, rng: np.random.Generator) -> int:
    """Index drawn with probability proportional to 1 / (1 + fitness)."""
    fits = np.asarray(fitnesses, dtype=np.float64)
    if fits.size == 0:
        raise EmptyPopulation("cannot select from an empty population")
    if np.any(fits < 0) or not np.all(np.isfinite(fits)):
        raise ValueError("fitness values must be finite and non-negative")
    cumulative = np.cumsum(1.0 / (1.0 + fits))
    draw = rng.random() * cumulative[-1]
    return int(min(np.searchsorted(cumulative, draw, side="right"), fits.size - 1))


def crossover(
    p1: Arrangement, p2: Arrangement, planes: CrossoverPlanes
) -> tuple[Arrangement, Arrangement]:
    """Exchange the box {x < px, y < py, z < pz} between two parents.

    Each child keeps one parent's ids at the occupied cells inside the box;
    the occupied cells outside are refilled, in scan order, with the ids
    missing from the box, taken in the order they appear in the other
    parent's scan traversal. Children occupy exactly the parents' cells.
    """
    if p1.dims != p2.dims:
        raise ShapeMismatch(f"parents differ in dims: {p1.dims} vs {p2.dims}")
    dims = p1.dims
    if not (0 <= planes.px <= dims.n1 and 0 <= planes.py <= dims.n2 and 0 <= planes.pz <= dims.n3):
        raise ValueError(f"planes {planes} outside axis bounds of {dims}")
    v1 = p1.scan_vector()
    v2 = p2.scan_vector()
    occupied = np.flatnonzero(v1)
    if not np.array_equal(occupied, np.flatnonzero(v2)):
        raise ShapeMismatch("parents do not share an occupancy pattern")
    xs, ys, zs = scan_coords(dims)
    region = (xs[occupied] < planes.px) & (ys[occupied] < planes.py) & (zs[occupied] < planes.pz)
    s1, s2 = v1[occupied], v2[occupied]
    top = int(max(s1.max(initial=0), s2.max(initial=0)))
    mark = np.zeros(top + 1, dtype=bool)
    c1 = _order_fill(s1, s2, region, mark)
    c2 = _order_fill(s2, s1, region, mark)
    out1, out2 = v1.copy(), v2.copy()
    out1[occupied] = c1
    out2[occupied] = c2
    return (
        Arrangement.from_scan_vector(dims, out1),
        Arrangement.from_scan_vector(dims, out2),
    )


def mutate(arr: Arrangement, rng: np.random.Generator) -> Arrangement:
    """Swap the ids of two occupied cells drawn uniformly (possibly the same cell)."""
    vector = arr.scan_vector().copy()
    occupied = np.flatnonzero(vector)
    if occupied.size == 0:
        return arr
    a, b = rng.integers(0, occupied.size, size=2)
    ia, ib = occupied[a], occupied[b]
    vector[ia], vector[ib] = vector[ib], vector[ia]
    return Arrangement.from_scan_vector(arr.dims, vector)


def evolve_step(
    population: list[Arrangement],
    instance: Instance,
    cfg: GaConfig,
    rng: np.random.Generator,
) -> list[Arrangement]:
    """Advance one generation: N offspring, merge with incumbents, keep the best N.

    The returned population is sorted by fitness ascending; at equal fitness
    incumbents precede offspring, so repeat runs are reproducible.
    """
    if len(population) != cfg.pop_size:
        raise ValueError(f"population size {len(population)} != cfg.pop_size {cfg.pop_size}")
    ctx = _context(instance)
    seqs = np.stack([arr.id_sequence() for arr in population])
    fits = _batch_fitness(seqs, ctx)
    check = _debug_check(instance) if cfg.validate_every_individual else None
    new_seqs, _ = _step_seqs(seqs, fits, ctx, cfg, rng, check)
    return [Arrangement.from_id_sequence(instance.dims, s) for s in new_seqs]


def run(instance: Instance, cfg: GaConfig) -> RunStats:
    """Evolve for `cfg.generations` generations and record per-generation stats.

    The initial population counts as generation 1; every further generation
    is one `evolve_step`. Results are deterministic for a fixed seed except
    for the wall-clock `elapsed_ms` fields.
    """
    rng = np.random.default_rng(mask_seed(cfg.seed))
    ctx = _context(instance)
    check = _debug_check(instance) if cfg.validate_every_individual else None

    started = time.perf_counter()
    seqs = _init_seqs(ctx, cfg, rng)
    fits = _batch_fitness(seqs, ctx)
    if check is not None:
        check(seqs)
    records = [
        GenerationRecord(
            1,
            float(fits.min()),
            float(fits.mean()),
            (time.perf_counter() - started) * 1e3,
        )
    ]
    for generation in range(2, cfg.generations + 1):
        started = time.perf_counter()
        seqs, fits = _step_seqs(seqs, fits, ctx, cfg, rng, check)
        records.append(
            GenerationRecord(
                generation,
                float(fits[0]),
                float(fits.mean()),
                (time.perf_counter() - started) * 1e3,
            )
        )
    best_row = int(np.argmin(fits))
    best = Arrangement.from_id_sequence(instance.dims, seqs[best_row])
    return RunStats(tuple(records), best, float(fits[best_row]))

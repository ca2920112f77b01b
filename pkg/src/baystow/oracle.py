"""Independent optimum finders used to cross-check the evolution engine.

Both oracles search the same space as the engine: permutations of the
container ids over the canonically occupied cells. `exhaustive_optimum`
enumerates every permutation and is limited to small instances;
`rearrangement_optimum` sorts priorities against stacking depths, which is
optimal because the cost is a sum of pairwise products between a fixed
multiset of priorities and a fixed multiset of above-counts: pairing the
largest priority with the smallest count minimizes the sum. The two agree
wherever both apply, and each reports its optimum through the same fitness
code path the engine uses, so values are directly comparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .arrangement import Arrangement
from .bay import canonical_above_counts
from .errors import TooLarge
from .evaluation import fitness
from .instances import Instance

EXHAUSTIVE_LIMIT = 8


@dataclass(frozen=True)
class OracleResult:
    optimal_fitness: float
    witness: Arrangement


@lru_cache(maxsize=None)
def _all_permutations(n: int) -> np.ndarray:
    """All permutations of 1..n as an (n!, n) id matrix."""
    if n == 0:
        return np.empty((1, 0), dtype=np.int64)
    return np.array(list(permutations(range(1, n + 1))), dtype=np.int64)


def exhaustive_optimum(instance: Instance) -> OracleResult:
    """Minimum cost over every permutation of ids onto the occupied cells.

    Enumerates all Nc! candidates, so instances above EXHAUSTIVE_LIMIT
    containers are rejected. Ties resolve to the permutation that comes
    first in lexicographic id order.
    """
    nc = instance.n_containers
    if nc > EXHAUSTIVE_LIMIT:
        raise TooLarge(
            f"{nc} containers means {nc}! permutations; "
            f"exhaustive search is capped at {EXHAUSTIVE_LIMIT}"
        )
    perms = _all_permutations(nc)
    above = canonical_above_counts(instance.dims, nc)
    priorities = instance.priority_vector()
    costs = priorities[perms - 1] @ above if nc else np.zeros(1)
    witness = Arrangement.from_id_sequence(instance.dims, perms[int(np.argmin(costs))])
    return OracleResult(fitness(witness, instance).fitness, witness)


def rearrangement_optimum(instance: Instance) -> OracleResult:
    """Optimal assignment by sorting: highest priority into the least-buried cell.

    Scales to any instance size. Ties in priority break by ascending id and
    ties in depth by scan order, both stable, so the witness is unique.
    """
    nc = instance.n_containers
    above = canonical_above_counts(instance.dims, nc)
    priorities = instance.priority_vector()
    id_order = np.argsort(-priorities, kind="stable")
    cell_order = np.argsort(above, kind="stable")
    seq = np.empty(nc, dtype=np.int64)
    seq[cell_order] = id_order + 1
    witness = Arrangement.from_id_sequence(instance.dims, seq)
    return OracleResult(fitness(witness, instance).fitness, witness)

"""Two independent ways to know the true optimum, and how the engine compares.

Run with: python3 demos/03_oracles.py
"""

from baystow import (
    BayDims,
    GaConfig,
    GeneratorSpec,
    exhaustive_optimum,
    generate_instance,
    rearrangement_optimum,
    run,
)

# Small enough to enumerate: 8 containers have 8! = 40320 arrangements.
small = generate_instance(GeneratorSpec(BayDims(2, 2, 2), n_containers=8, seed=21))
ex = exhaustive_optimum(small)
re = rearrangement_optimum(small)
print("8 containers in a 2x2x2 bay")
print(f"  exhaustive optimum     {ex.optimal_fitness:.6f}")
print(f"  sorting construction   {re.optimal_fitness:.6f}")
print(f"  agree: {abs(ex.optimal_fitness - re.optimal_fitness) < 1e-12}")

# The sorting construction pairs the highest priorities with the least-buried
# cells, which the rearrangement inequality makes optimal. Unlike enumeration
# it scales to any size.
big = generate_instance(GeneratorSpec(BayDims(10, 10, 10), n_containers=1000, seed=22))
bound = rearrangement_optimum(big)
print(f"\n1000 containers in a 10x10x10 bay")
print(f"  optimum by sorting     {bound.optimal_fitness:.4f}")

# The engine should land on the small optimum exactly and approach the
# large bound from above.
small_run = run(small, GaConfig(pop_size=50, generations=200, seed=31))
print(f"\nengine on the small instance: {small_run.best_fitness:.6f} "
      f"(optimum {ex.optimal_fitness:.6f})")

mid = generate_instance(GeneratorSpec(BayDims(4, 4, 4), n_containers=64, seed=23))
mid_bound = rearrangement_optimum(mid).optimal_fitness
mid_run = run(mid, GaConfig(pop_size=50, generations=300, seed=32))
print(f"engine on 64 containers:      {mid_run.best_fitness:.4f} "
      f"(bound {mid_bound:.4f}, ratio {mid_run.best_fitness / mid_bound:.3f})")

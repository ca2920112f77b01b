"""Parameter sweeps: how problem size, generation budget, and population
size move the final fitness and the runtime.

Run with: python3 demos/04_sweeps.py
"""

from baystow import BayDims, GaConfig, SweepSpec, run_sweep


def show(title, result):
    print(title)
    print("  value   mean F_i   mean F_f    ratio   mean ms")
    for p in result.points:
        ratio = p.mean_final_best / p.mean_initial_best
        print(f"  {p.swept_value:5d}   {p.mean_initial_best:8.3f}   "
              f"{p.mean_final_best:8.3f}   {ratio:6.3f}   {p.mean_elapsed_ms:7.1f}")
    print()


# Growing problem sizes, each in the smallest cube bay that fits.
containers = SweepSpec(
    "containers",
    (64, 125, 343),
    config=GaConfig(pop_size=50, generations=100),
    reps=3,
    base_seed=1,
)
show("container-count sweep (cube bays, 100 generations):", run_sweep(containers))

# Longer runs on a fixed instance shape; the gains flatten out.
generations = SweepSpec(
    "generations",
    (20, 50, 100, 200),
    config=GaConfig(pop_size=50),
    n_containers=64,
    dims=BayDims(4, 4, 4),
    reps=3,
    base_seed=2,
)
show("generation-budget sweep (64 containers):", run_sweep(generations))

# Bigger populations buy quality with time.
population = SweepSpec(
    "population",
    (20, 50, 125),
    config=GaConfig(generations=100),
    n_containers=125,
    dims=BayDims(5, 5, 5),
    reps=3,
    base_seed=3,
)
show("population-size sweep (125 containers):", run_sweep(population))

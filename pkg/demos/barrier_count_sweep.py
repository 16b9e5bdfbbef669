"""What more barrier layers buy, and what they cost.

Part 1 narrows the innermost width to 1e-6 and grows the ladder between the
same endpoints: the steady-state |s| maximum falls monotonically with N
because each added layer shortens the gain jump at every hand-off.

Part 2 repeats the study in the undersampled regime (Ts = 1e-3, reduced
disturbance): more layers raise innermost occupancy but also multiply layer
switches, i.e. chattering is the price of the finer ladder.
"""

from __future__ import annotations

from pathlib import Path

from barrier_sta import (
    SweepGrid,
    apply_axis,
    emit_sweep_table,
    nominal_scenario,
    reduced_disturbance_scenario,
    run_sweep,
)

OUT = Path(__file__).resolve().parent / "out" / "layers"


def accuracy_study() -> None:
    base = apply_axis(nominal_scenario(), "eps_minus", 1e-6)
    grid = SweepGrid(base=base, axes=(("N", (2, 5, 20, 50)),))
    rows = run_sweep(grid)
    emit_sweep_table(rows, OUT, stem="accuracy")
    print("ladder endpoints 1e-6 .. 1e-3, Ts = 1e-5, full disturbance")
    print(f"{'N':>4} {'max_s_ss':>12} {'switches':>9}")
    for row in rows:
        m = row.metrics
        print(f"{int(row.params['N']):>4} {m.max_s_ss:>12.3e} "
              f"{m.switch_count:>9}")
    print()


def chatter_study() -> None:
    base = apply_axis(reduced_disturbance_scenario(), "Ts", 1e-3)
    grid = SweepGrid(base=base, axes=(("N", (5, 20, 50, 200)),))
    rows = run_sweep(grid)
    emit_sweep_table(rows, OUT, stem="chatter")
    print("ladder endpoints 1e-4 .. 1e-1, Ts = 1e-3, reduced disturbance")
    print(f"{'N':>4} {'occ innermost':>14} {'switches':>9} {'chatter':>12}")
    for row in rows:
        m = row.metrics
        print(f"{int(row.params['N']):>4} {m.occ_innermost:>14.4f} "
              f"{m.switch_count:>9} {m.chatter_index:>12.3e}")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    accuracy_study()
    chatter_study()
    print(f"tables in {OUT}")


if __name__ == "__main__":
    main()

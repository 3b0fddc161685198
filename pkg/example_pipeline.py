"""
Walkthrough of the library: solve a preset, inspect the routing, simulate it
and compare against a centralized baseline.
"""

import sys
from pathlib import Path
from dotenv import load_dotenv

sys.path.insert(0, str(Path(__file__).parent))
load_dotenv()

from src.metrics.queueing import mm1_mean_sojourn
from src.network.pathgen import enumerate_paths
from src.pipeline.orchestrator import PipelineOrchestrator
from src.pipeline.reporting import format_summary
from src.parsers.routing_file import format_routing_table
from src.scenario.assembly import build_commodities, build_graph
from src.scenario.presets import baseline_single, reference_preset


def example_solve():
    """Example: Optimize routing for the 10 Gbit/s preset."""
    print("=" * 80)
    print("Example 1: Max-min routing on the 4x4 torus")
    print("=" * 80)

    scenario = reference_preset(1_000_000, 10e9, 60_000)
    graph = build_graph(scenario)
    commodities = build_commodities(scenario, graph)
    for commodity in commodities:
        pathset = enumerate_paths(graph, commodity, scenario.max_hops)
        print(f"  commodity {commodity.id}: {commodity.source}->{commodity.destination}, {len(pathset)} paths")

    outcome = PipelineOrchestrator().solve(scenario)
    print(f"\nz* = {outcome.summary.objective_bps / 1e9:.3f} Gbit/s on edge {outcome.summary.min_residual_edge}")
    print("\nRouting table:")
    print(format_routing_table(outcome.table))


def example_compare():
    """Example: Proposed payload against the 2x and 8x centralized baselines."""
    print("\n" + "=" * 80)
    print("Example 2: Proposed payload vs centralized baselines")
    print("=" * 80)

    orchestrator = PipelineOrchestrator()
    base = reference_preset(10_000, 10e9, 60_000).model_copy(update={"horizon_s": 0.1, "reps": 3})
    for scenario in (base, baseline_single(2, base), baseline_single(8, base)):
        report = orchestrator.run(scenario)
        print("\n" + "-" * 80)
        print(format_summary(report))

    print(f"\nM/M/1 reference for one modem bank at 60k/100k: {mm1_mean_sojourn(60_000, 100_000) * 1e6:.1f} us")


if __name__ == "__main__":
    try:
        example_solve()
        example_compare()
    except KeyboardInterrupt:
        print("\n\nInterrupted by user")
    except Exception as e:
        print(f"\n\nError: {e}")
        import traceback
        traceback.print_exc()

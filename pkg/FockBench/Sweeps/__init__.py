"""
One sweep class per `fockbench` subcommand.
"""

from FockBench.config import ExperimentKind
from FockBench.Sweeps.AsymptoticsSuite import AsymptoticsSuite
from FockBench.Sweeps.CollapseDistanceSweep import CollapseDistanceSweep
from FockBench.Sweeps.DistributionSweep import DistributionSweep
from FockBench.Sweeps.KernelSweep import KernelSweep
from FockBench.Sweeps.OutcomeSampling import OutcomeSampling
from FockBench.Sweeps.StructuralSuite import StructuralSuite
from FockBench.Sweeps.TeleportSweep import TeleportSweep

SWEEPS = {
    ExperimentKind.STRUCTURAL: StructuralSuite,
    ExperimentKind.DISTRIBUTION: DistributionSweep,
    ExperimentKind.COLLAPSE: KernelSweep,
    ExperimentKind.PITOP: CollapseDistanceSweep,
    ExperimentKind.ASYMPTOTICS: AsymptoticsSuite,
    ExperimentKind.TELEPORT: TeleportSweep,
    ExperimentKind.SAMPLE: OutcomeSampling,
}

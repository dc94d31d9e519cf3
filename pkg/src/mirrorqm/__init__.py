"""Mirror Hilbert space toolkit: biquaternions, mirror conjugation, block
Fock operators and regulated commutator functions, with a batch verifier."""

from .biquat import Biquaternion, quat_mirror, quat_mul, units
from .checks import SuiteConfig, run_suite
from .qmatrix import QMatrix, mirror_conj
from .report import CheckReport, render_report

__all__ = [
    "Biquaternion",
    "CheckReport",
    "QMatrix",
    "SuiteConfig",
    "mirror_conj",
    "quat_mirror",
    "quat_mul",
    "render_report",
    "run_suite",
    "units",
]

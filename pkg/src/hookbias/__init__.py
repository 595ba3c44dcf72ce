"""Exact enumeration and q-series tools for hooks of small length in odd and
distinct partitions."""
from .errors import DomainError, ExactnessError
from .partitions import (Partition, PartitionClass, alternating_sum, conjugate, count_beck,
                         enumerate_partitions, hook_count, hook_length, hook_lengths,
                         parse_partition, render_young)
from .qseries import BivariateSeries, TruncatedSeries, gaussian_binomial, poch
from .report import VerificationReport
from .sylvester import PairPartition, enumerate_a, enumerate_b, phi, psi, sigma, verify_injection

__version__ = "0.1.0"

__all__ = [
    "BivariateSeries", "DomainError", "ExactnessError", "PairPartition", "Partition",
    "PartitionClass", "TruncatedSeries", "VerificationReport", "alternating_sum", "conjugate",
    "count_beck", "enumerate_a", "enumerate_b", "enumerate_partitions", "gaussian_binomial",
    "hook_count", "hook_length", "hook_lengths", "parse_partition", "phi", "poch", "psi",
    "render_young", "sigma", "verify_injection",
]

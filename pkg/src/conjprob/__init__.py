"""Exact conjugacy statistics for symmetric and small finite groups."""

from conjprob.partitions import (
    CycleType,
    centralizer_order,
    class_size_power_sums,
    conjugacy_class_size,
    count_partitions,
    encode_cycle_type,
    decode_cycle_type,
    enumerate_partitions,
)

__version__ = "0.1.0"

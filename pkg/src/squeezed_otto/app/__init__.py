"""Sweeps, figure data, verification harness and the command line."""
from .sweeps import (RegionCell, adiabaticity_sweep, efficiency_sweep, ho_comparison,
                     no_work_boundary_r, region_map, region_table)
from .tables import Table, from_csv, from_json, parse_grid, to_csv, to_json
from .verify import verify

__all__ = [
    "RegionCell", "Table", "adiabaticity_sweep", "efficiency_sweep", "ho_comparison",
    "no_work_boundary_r", "region_map", "region_table", "from_csv", "from_json",
    "parse_grid", "to_csv", "to_json", "verify",
]

from .conflict import conflict_graph, subset_mask
from .lattices import (
    LatticeCache,
    count_lattices,
    enumerate_lattices,
    greedy_lattice,
    is_dispersion,
    is_lattice,
    iter_lattices,
    minimum_lattice,
    minimum_lattice_size,
    random_lattice,
)
from .models import BoundEstimate, ConflictGraph, Direction, Lattice
from .search import (
    LatticeSearch,
    MeanObjective,
    Objective,
    SearchConfig,
    SizeObjective,
    extremal_average,
    search_lattices,
    smallest_lattice_found,
)

__all__ = [
    'BoundEstimate',
    'ConflictGraph',
    'Direction',
    'Lattice',
    'LatticeCache',
    'LatticeSearch',
    'MeanObjective',
    'Objective',
    'SearchConfig',
    'SizeObjective',
    'conflict_graph',
    'count_lattices',
    'enumerate_lattices',
    'extremal_average',
    'greedy_lattice',
    'is_dispersion',
    'is_lattice',
    'iter_lattices',
    'minimum_lattice',
    'minimum_lattice_size',
    'random_lattice',
    'search_lattices',
    'smallest_lattice_found',
    'subset_mask',
]

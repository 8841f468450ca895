"""
Source package for lattice-mean

Means of real-valued functions over finite metric spaces, taken as limits of
extremal averages over eps-lattices (maximal eps-dispersions), plus relative
measures and thin-boundary verdicts built on top of them.

Modules:
    metric: Finite metric spaces, axiom validation and subspaces
    functions: Evaluatable functions on points and their JSON documents
    lattice: Conflict graphs, lattice enumeration and lattice search
    means: Lower/upper means, eps sweeps and fixed-eps invariant checks
    measure: Relative measure, boundary ratios and region documents
    verify: Seeded random instances and the invariant registry
    reporting: CSV/JSON result tables
"""

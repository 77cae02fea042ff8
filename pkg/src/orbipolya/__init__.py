"""Exact cycle index and orbicycle index polynomials of permutation groups,
with orbit-counting and Polya theory for quotients and orbiquotients."""

from .counting import (
    c_orb_cyclic,
    coloring_coefficient,
    coloring_gf,
    cycles_on_quotient,
    necklace_count,
    orbi_polya_count,
    orbifold_cohomology_dimension,
    orbinecklace_count,
    orbiquotient_count,
    polya_count,
    quotient_count,
)
from .cycleindex import (
    cycle_index,
    cycle_index_cyclic,
    cycle_index_dihedral,
    cycle_index_symmetric,
    orbicycle_index,
    orbicycle_index_cyclic,
    orbicycle_index_dihedral,
    orbicycle_index_symmetric,
)
from .permgroup import (
    Permutation,
    PermutationGroup,
    builtin_group,
    compose,
    conjugacy_data,
    generate_elements,
    parse_group_spec,
    parse_permutation,
)
from .polyring import Monomial, MultiPoly, power_substitute
from .setpart import SetPartition, cycle_partition, join, meet
from .weighted import GroupAction, WeightedSet, weighted_cardinality

__version__ = "0.1.0"

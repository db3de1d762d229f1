"""Exact root-system, affine-alcove, and centralizer computations for
compact simple Lie groups.

All arithmetic is exact (integers and fractions); nothing here floats.
"""

from .centralizer import (CentralizerDescriptor, SubsystemDescriptor,
                          annihilator_subsystem, centralizer_tuple,
                          classify_cartan, component_group, pi1_gcd)
from .diagram import (CenterElement, DiagramAutomorphism, ExtendedDiagram,
                      automorphism_group, center_automorphism, center_element,
                      center_elements, extended_diagram, fold_cyclic)
from .errors import ResourceCapExceeded
from .intlat import (FiniteAbelianGroup, IntegerLattice, center,
                     coroot_lattice, coweight_lattice, lattice_from_rows,
                     saturation_quotient, smith_normal_form)
from .moduli import (CPairData, TorsionLevel, count_pairs_burnside,
                     count_pairs_direct, cpair_fixed_space, delta_c)
from .rootsys import (RootSystem, SimpleType, build, build_named,
                      coroot_in_coweight_basis, parse_point, parse_type)
from .weyl import (AlcovePoint, WeylElement, orbit, reduce_to_alcove, reflect,
                   stabilizer, weyl_group)

__version__ = "0.1.0"

"""
Exact group theory for S_2 wr S_n: elements, permutation embeddings,
invariant subspaces, cocycles and the census of subgroups surjecting
onto S_n.
"""
from .wreath import (WreathElement, multiply, embed_2n, embed_3n,
                     all_elements, random_element, group_order, perm_sign,
                     cycle_type)
from .subspaces import Subspace, invariant_subspaces
from .cohomology import cocycle_space, is_cocycle
from .subgroups import (SubgroupDescriptor, overgroup_census, named_subgroup,
                        cycle_type_distribution, closure, conjugate, census_rows,
                        TAGS)

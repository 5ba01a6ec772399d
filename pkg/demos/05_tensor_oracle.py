"""The tensor-space oracle and the two-sided cross-check.

An exact integer model of a highest-weight module tensored with d
copies of the natural module carries commuting Hecke-type operators
x_1..x_d and transpositions s_1..s_{d-1}.  Their simultaneous
generalised eigenspace dimensions match the diagram side: translation
composites of the ground-state standard class, weighted by module
dimensions.
"""

from arcalg import (
    casimir_check,
    check_hecke_relations,
    check_two_sided,
    weight_decomposition,
)

print("== relation suite ==")
rep = check_hecke_relations(2, 2, 0, 1, 2)
print(f"(m,n)=(2,2), p=0, q=1, d=2: pass={rep['pass']}")
print(f"  full space dimension {rep['dimension']},"
      f" highest-weight module dimension {rep['highest_weight_module_dim']} = 2^(mn)")
print(f"  independent flattened operators: {rep['independent_operator_count']}"
      f" = 2^d * d!")

print()
print("== eigenspace decomposition ==")
dims = weight_decomposition(1, 1, 0, 1, 2)
for key, dim in sorted(dims.items()):
    print(f"  eigenvalues {key}: dimension {dim}")
print(f"  total {sum(dims.values())} = 2^(mn) (m+n)^d")

print()
print("== two-sided agreement ==")
rep = check_two_sided(1, 1, 0, 1, 2)
print(f"oracle (window part): {rep['oracle']}")
print(f"diagram prediction:   {rep['diagram']}")
print(f"agree: {rep['pass']}")

print()
print("== Casimir bookkeeping ==")
rep = casimir_check(2, 1, (3, 1, 0), 2)
print(f"step identity at an even direction: lhs={rep['lhs']} rhs={rep['rhs']}"
      f" equal={rep['equal']}")
rep = casimir_check(2, 1, (3, 1, 0), 3)
print(f"step identity at an odd direction:  lhs={rep['lhs']} rhs={rep['rhs']}"
      f" equal={rep['equal']}")

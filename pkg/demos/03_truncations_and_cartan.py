"""Finite truncations: Cartan matrices and endomorphism rings.

For a window [p-m+1, q+n] the basis vectors with cup and cap parts
from the core weight set span a finite algebra.  Its graded Cartan
matrix factors as D^T D where D is the decomposition matrix of the
cellular structure, and the endomorphism ring of each projective is an
exterior-style ring of dimension 2^defect.
"""

from arcalg import (
    build_truncation,
    cartan_matrix,
    cartan_from_decomposition,
    check_associativity,
    endo_ring,
    kac_layers,
)

t = build_truncation(1, 1, 0, 2)
print(f"truncation (m,n)=(1,1), window p=0..q=2: dimension {t.dimension}")

rows, _, C = cartan_matrix(t, graded=True)
_, _, C2 = cartan_from_decomposition(t, graded=True)
print()
print("graded Cartan matrix (rows/cols = core weights):")
for w, row in zip(rows, C):
    tag = "".join(f"{lab}{pos}" for pos, lab in w.entries)
    print(f"  {tag:8}", [str(x) for x in row])
match = all(str(a) == str(b) for r1, r2 in zip(C, C2) for a, b in zip(r1, r2))
print(f"equals D^T D: {match}")

print()
print("endomorphism rings of the projectives:")
for lam in t.lambda_core:
    rep = endo_ring(t, lam)
    tag = "".join(f"{lab}{pos}" for pos, lab in lam.entries)
    print(f"  {tag:8} dim {rep['dimension']} = 2^{rep['defect']},"
          f" commutative: {rep['commutative']},"
          f" generators square to zero: {rep['generators_square_to_zero']}")

print()
lam = t.lambda_core[0]
layers = kac_layers(lam)
print("layers of one standard module (grading layer -> simple labels):")
for k, ws in sorted(layers.items()):
    print(f"  {k}: {[''.join(f'{lab}{pos}' for pos, lab in w.entries) for w in ws]}")

print()
rep = check_associativity(t, mode="exhaustive")
print(f"exhaustive associativity over all basis triples: {rep['pass']}"
      f" (diagnostic counter {rep['diagnostic_counter']})")

"""Translation operators, basis changes, crystals, stretched diagrams.

Translation operators F_i and E_i act on the Grothendieck group in the
standard-class basis.  The crystal graph records which single step is
possible at each vertex; greedily walking a weight down to the ground
state and replaying the walk with F's recovers 2^defect times its
projective class.
"""

from arcalg import (
    GrothendieckVector,
    apply_F,
    change_basis,
    crystal_edges,
    enumerate_stretched,
    lambda_ground,
    path_to_ground,
    serre_check,
    theorem_dec_vector,
    verify_path,
)
from arcalg.weights import Weight


def tag(w):
    return "".join(f"{lab}{pos}" for pos, lab in w.entries) or "empty"


print("== one translation step ==")
g = lambda_ground(0, 1, 1, 1)
v = GrothendieckVector.of("V", g)
print(f"[V({tag(g)})] --F_0--> "
      + " + ".join(f"{c}[V({tag(w)})]" for w, c in apply_F(0, v).canonical_items()))

print()
print("== basis change P -> V -> L and back ==")
lam = Weight.make(1, 1, {0: "v"})
p = GrothendieckVector.of("P", lam)
in_v = change_basis(p, "V")
in_l = change_basis(p, "L")
print(f"[P({tag(lam)})] = "
      + " + ".join(f"{c}[V({tag(w)})]" for w, c in in_v.canonical_items()))
print(f"          = "
      + " + ".join(f"{c}[L({tag(w)})]" for w, c in in_l.canonical_items()))
assert change_basis(in_l, "P").entries == p.entries

print()
print("== crystal walk back to the ground state ==")
lam = Weight.make(1, 1, {1: "v"})
p0, q0, path, r = path_to_ground(lam)
print(f"{tag(lam)}: window p={p0}, q={q0}, colours {list(path)}, circle steps r={r}")
print(f"replaying with F's gives 2^{r} [P({tag(lam)})]: {verify_path(lam, p0, q0, path, r)}")
print("crystal edges at this weight:",
      [(i, tag(w)) for i, w in crystal_edges(lam)])

print()
print("== stretched diagram counts ==")
for d in (1, 2):
    dims, total = enumerate_stretched(0, 0, 2, 2, d)
    print(f"d={d}: total oriented stretched circle diagrams = {total}"
          f" (= 2^{d} * {d}!)")
vec = theorem_dec_vector(0, 1, 2, 1, 2)
print("depth-2 translation composite of the ground class:",
      " + ".join(f"{c}[V({tag(w)})]" for w, c in vec.canonical_items()))

print()
rep = serre_check(0, 1, 1, 1)
print(f"Serre relation suite on the (1,1) window p=0..q=1: {rep['pass']}")

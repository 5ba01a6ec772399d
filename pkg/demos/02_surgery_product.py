"""Multiplying oriented circle diagrams by surgery.

Two basis vectors compose when the cap diagram of the first mirrors
the cup diagram of the second; each surgery step replaces one mirror
pair by vertical lines and either merges two components or splits one,
following the 1/x/y rules (anticlockwise circle / clockwise circle /
line).
"""

from arcalg import multiply, make_basis_vector, unlisted_count
from arcalg.arcs import CupDiagram, CapDiagram
from arcalg.weights import Weight, block_of
from arcalg.serialize import render_ascii

w = Weight.make(2, 2, {2: "v", 4: "v"})
blk = block_of(w)
x = make_basis_vector(CupDiagram(((2, 3), (4, 5)), blk), w,
                      CapDiagram(((2, 5), (3, 4)), blk))
y = make_basis_vector(CupDiagram(((2, 5), (3, 4)), blk), w,
                      CapDiagram(((1, 2), (4, 5)), blk))

print("x =")
print(render_ascii(x))
print(f"degree {x.degree}")
print()
print("y =")
print(render_ascii(y))
print(f"degree {y.degree}")

trace = []
prod = multiply(x, y, trace=trace)
print()
print("x . y =")
for v, c in prod.canonical_terms():
    print(f"coefficient {c}:")
    print(render_ascii(v))
    print(f"degree {v.degree}  (= {x.degree} + {y.degree}: grading is additive)")
print()
print("surgery steps:", " then ".join(trace))
print("unlisted rule combinations hit so far:", unlisted_count())

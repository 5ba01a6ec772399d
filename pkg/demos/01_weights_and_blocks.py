"""Weight diagrams: the dictionary, blocks, and Bruhat order.

A dominant integral weight for GL(m|n) is a tuple of m weakly
decreasing followed by n weakly increasing-at-the-right coefficients.
The dictionary turns it into a labelling of the integer line with
v (both), x (first kind only), o (second kind only) and implicit ^.
"""

from arcalg import (
    GlWeight,
    block_of,
    bruhat_leq,
    defect,
    enumerate_window,
    from_gl_weight,
    height,
    is_kostant,
    lambda_ground,
    to_gl_weight,
)


def show(w):
    lo = min(p for p, _ in w.entries)
    hi = max(p for p, _ in w.entries)
    return " ".join(f"{w.label(i)}@{i}" for i in range(lo, hi + 1))


print("== the dictionary ==")
gl = GlWeight((0, 0, -3), (2, 1))
w = from_gl_weight(gl)
print(f"coefficients {gl.coeffs} -> {show(w)}")
back = to_gl_weight(w)
print(f"and back: {back.coeffs}")
assert back.coeffs == gl.coeffs

print()
print("== blocks and defect ==")
print(f"block: {block_of(w)}")
print(f"defect (atypicality): {defect(w)}, height: {height(w)}")
print(f"Kostant pattern (no v^v seen left-to-right): {is_kostant(w)}")

print()
print("== a window of weights, ordered by Bruhat ==")
weights = enumerate_window(0, 1, 1, 1)
for a in weights:
    below = [show(b) for b in weights if b != a and bruhat_leq(b, a)]
    print(f"{show(a):14}  strictly above: {below or '-'}")

print()
print("== ground-state weight of the window ==")
g = lambda_ground(0, 1, 1, 1)
print(f"lambda_ground(p=0, q=1): {show(g)}  (defect {defect(g)})")

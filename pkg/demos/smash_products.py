"""Smash product of pointed sets: why it is biexact and what goes wrong for a projection."""

from waldcat import check_k_exact, finset_pointed, is_good
from waldcat.multiexact import box_cube, projection, smash
from waldcat.pointed import PMap

W = finset_pointed(3)
F = smash(W)

f = PMap(1, 2, (0, 1))
C = box_cube([f, f], F)
print("box square of the inclusion 1 -> 2 with itself:", C.vertices)
print("good:", is_good(C).good)

print("smash:", check_k_exact(F).summary())
rep = check_k_exact(projection(W, W))
print("projection:", rep.summary())
print("  first zero-absorption witness:", rep.witnesses["kE1"][0])

"""Low levels of the S-construction for pointed sets, its face maps, and K0."""

from waldcat import enumerate_Sn, finset_pointed, k0_presentation
from waldcat.sdot import build_truncation, face, simplicial_identity_failures

W = finset_pointed(3)
for n in range(4):
    print(f"S_{n}: {len(enumerate_Sn(W, n))} objects")

S = next(S for S in enumerate_Sn(W, 2) if (S.at(0, 1), S.at(0, 2)) == (1, 2))
print("A -> B -> B/A with sizes", S.at(0, 1), S.at(0, 2), S.at(1, 2))
for d in range(3):
    print(f"  face {d}:", face(S, d).at(0, 1))

print("simplicial identity failures up to level 3:", simplicial_identity_failures(build_truncation(W, 3)))
P = k0_presentation(W)
print("K0 =", P.describe(), "generated by the class of", P.free_generator())

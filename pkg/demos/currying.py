"""Curry the smash product into the category of exact endofunctors and back."""

from waldcat import NotExactError, build_hom, check_wald_axioms, curry, finset_pointed, uncurry
from waldcat.homwald import tabulate
from waldcat.multiexact import smash

W = finset_pointed(3)
H = build_hom([W], W)
print(f"{len(H.functors)} exact endofunctors;", check_wald_axioms(H).summary())

F = smash(W)
G = curry(F, H, 1)
for b in W.skeleton():
    try:
        T = G.obj((b,))
    except NotExactError as exc:
        # smashing with two points doubles sizes, which leaves the bounded skeleton
        print(f"  smash with {b}:  outside the fragment ({exc})")
        continue
    print(f"  smash with {b}: ", [T.obj((a,)) for a in W.skeleton()])
small = finset_pointed(2)
Hs = build_hom([small], small)
Gs = curry(smash(small), Hs, 1)
print("round trip at size 2:", tabulate(uncurry(Gs, Hs)) == tabulate(smash(small)))

# Coordinates of boundary points (trees) and of smooth curves under the iterated
# Kapranov embedding, plus the hyperplane check that the tournament classes satisfy.
from fractions import Fraction

from lazytour import embed_boundary, embed_interior, parse_tree, verify_hyperplanes
from lazytour.kapranov import embed_interior_all, parse_configuration
from lazytour.trees import A, B, C

for text in ("(a,b,((c,2),1))", "(a,b,((c,1),2))"):
    print(text, embed_boundary(parse_tree(text)))

# a smooth curve: marked points on the line, one of them may sit at infinity
cfg = parse_configuration("a=0,b=1,c=2,1=3,2=inf")
print(embed_interior_all(cfg))

# squeeze a-b together and c-1 together: the point slides to (a,b,((c,1),2))
for eps in (Fraction(1, 10), Fraction(1, 1000)):
    pts = {A: Fraction(0), B: eps, C: Fraction(2), 1: 2 + eps, 2: Fraction(5)}
    # rescale so z_c = 1, matching the limit [0:1] x [0:1:1]
    print(eps, [[float(x / f.coords[1]) for x in f.coords]
                for f in (embed_interior(pts, r) for r in (1, 2))])

# every tree in Tour(k) has its first k_r coordinates of factor r equal to zero
for k in [(1, 1), (0, 2), (0, 1, 2), (1, 0, 1, 2)]:
    print(k, verify_hyperplanes(k))

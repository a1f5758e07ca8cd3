# Trees in Tour(k) <-> column-restricted parking functions with column heights k.
from lazytour import ParkingFunction, dominance, is_column_restricted, parse_tree, r_map, tau, tau_inverse
from lazytour.parking import NotColumnRestrictedError
from lazytour.tournament import pi_lazy

t = parse_tree("(a,b,(((2,3),4),(c,1)))")
p = tau(t)  # car m sits in the column of whoever won round m
print("tau:", p, "heights", p.heights)
print("dominance:", dominance(p), "restricted:", is_column_restricted(p))
print("back:", tau_inverse(p))

# r on parking functions mirrors pi_lazy on trees
print(r_map(p), "==", tau(pi_lazy(t)[0]))

# car 2 dominates both columns to its right (d_2 = 2), so this one is not restricted
q = ParkingFunction.from_text("2;-;1;3,4")
print(q, dominance(q))
try:
    tau_inverse(q)
except NotColumnRestrictedError as exc:
    print("rejected:", exc)

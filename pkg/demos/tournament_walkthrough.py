# Walk through one lazy tournament round by round, then peel it apart with pi_lazy.
from lazytour import classify, parse_tree, pi_lazy, pi_lazy_inverse, run_tournament
from lazytour.trees import label_str

t = parse_tree("(a,b,(((2,3),4),(c,1)))")
print("tree:", t)  # printed in canonical order

tr = run_tournament(t)
for r in tr.rounds:
    how = "lazy, loser advances" if r.lazy else "winner advances"
    print(f"round {r.index}: {label_str(r.winner)} beats {label_str(r.loser)} ({how})")
print("wins per label 1..n:", tr.win_counts)

# the first loser is always the rightmost zero of the win counts
small, j = pi_lazy(t)
print("pi_lazy ->", small, "first winner", j, "class", classify(small))

# and the inverse needs j plus the original class to rebuild t
back = pi_lazy_inverse(small, j, tr.win_counts)
print("rebuilt:", back, back == t)

# a tree where a and b are not neighbours can still play, but has no class
odd = parse_tree("(a,c,(b,1))")
print([(label_str(r.loser), label_str(r.winner)) for r in run_tournament(odd).rounds])

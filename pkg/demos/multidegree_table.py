# Multidegrees three ways: the string recursion, counting tournament classes,
# and counting column-restricted parking functions.
from lazytour import compositions, cpf_set, is_support, multidegree
from lazytour.multidegrees import double_factorial
from lazytour.tournament import tour_counts

n = 4
tours = tour_counts(n)
print(f"{'k':>12} {'deg':>4} {'#Tour':>6} {'#CPF':>5} support")
for k in compositions(n):
    deg = multidegree(k)
    cpf = sum(1 for _ in cpf_set(k))
    print(f"{str(k):>12} {deg:>4} {tours.get(k, 0):>6} {cpf:>5} {is_support(k)}")

# totals are odd double factorials
for m in range(1, 11):
    total = sum(multidegree(k) for k in compositions(m))
    print(m, total, total == double_factorial(2 * m - 1))

# big n is fine, ints are unbounded and the recursion is memoised
print(multidegree((1,) * 20))

"""
Canonical bases and decomposition numbers
=========================================

Three routes to the same basis of one weight space of Fock space: the
triangular algorithm on psi-invariant seeds, the images of Hall canonical
elements on the vacuum, and (for finite wedges) Kazhdan-Lusztig polynomials.
"""
from qfock import decomposition_matrix, hall_basis, lt_basis
from qfock.canonfock import compare_bases
from qfock.combinat import format_partition
from qfock.klpoly import b_minus_via_kl

n, weight = 2, 4
plus = lt_basis(weight, n, "+")
for lam in plus.order:
    col = ", ".join(f"{c}*|{format_partition(mu)}>" for mu, c in plus.columns[lam].items())
    print(f"b+({format_partition(lam)}) = {col}")

print("Hall basis differs in", len(compare_bases(hall_basis(weight, n), plus)), "entries")

order, mat = decomposition_matrix(weight, n)
print("decomposition matrix, order", [format_partition(p) for p in order])
for row in mat:
    print(" ", row)

# finite wedge of length 2: the lower basis from KL polynomials
minus = lt_basis(3, n, "-", 2)
print(b_minus_via_kl((3,), n, 2) == minus.columns[(3,)])

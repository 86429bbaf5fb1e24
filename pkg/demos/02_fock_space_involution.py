"""
The involution psi on Fock space
================================

Partitions index the standard basis of the level-one Fock space.  psi
inverts v, squares to the identity and commutes with the divided powers
f_alpha of the quantum affine algebra.
"""
from qfock import f_alpha_fock, psi_semiinfinite
from qfock.laurent import ONE

n = 2
x = {(2, 1): ONE}
print("psi |2,1> =", psi_semiinfinite(x, n))
print("psi |2>   =", psi_semiinfinite({(2,): ONE}, n))

# f_(1,1) adds one box of each residue
y = f_alpha_fock((1, 1), x, n)
print("f_(1,1) |2,1> =", y)

lhs = psi_semiinfinite(f_alpha_fock((1, 1), x, n), n)
rhs = f_alpha_fock((1, 1), psi_semiinfinite(x, n), n)
print("psi f = f psi:", lhs == rhs)

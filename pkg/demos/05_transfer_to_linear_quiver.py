"""
From the cyclic quiver to the linear quiver
===========================================

gamma_d sends an element of the cyclic Hall algebra to the Hall algebra of
the linear quiver on Z, one Z-grading d at a time.  Summing over gradings
gives a second formula for the Fock space action.
"""
from qfock.canonfock import WedgeSpace, hall_fock_action
from qfock.combinat import parse_multisegment
from qfock.gamma import fock_action_via_gamma, gamma_map, h_exponent
from qfock.hallalg import HallVector, generator
from qfock.laurent import ONE

d = {0: 1, 2: 1}
print("h(d) =", h_exponent(d, 2))
print("gamma_d(f_(2,0)) =", gamma_map(d, generator(2, (2, 0))))

u = HallVector.orbit(parse_multisegment("1:2:1", 2))
x = {(1,): ONE}
print("wedge route:", hall_fock_action(u, x, WedgeSpace(2)))
print("gamma route:", fock_action_via_gamma(u, x))

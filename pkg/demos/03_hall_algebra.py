"""
Hall algebra of the cyclic quiver
=================================

Orbits of nilpotent representations are labelled by multisegments.
Products count subrepresentations over finite fields; the counts are fitted
by polynomials in q = v^2 and checked at a prime that was not used for the fit.
"""
from qfock.combinat import enumerate_multisegments, format_multisegment, parse_multisegment
from qfock.hallalg import HallVector, generator, hall_bar, hall_canonical_f_normalized, hall_product

for ms in enumerate_multisegments(2, (1, 1)):
    print(format_multisegment(ms), "orbit dimension", ms.orbit_dim())

# f_0 o f_1 sees two orbits: the zero representation and the segment [1,0]
print(hall_product(generator(2, (1, 0)), generator(2, (0, 1))))

seg = parse_multisegment("0:2:1", 2)
f = HallVector.orbit(seg)
print("bar f   =", hall_bar(f))
print("b_[0,1] =", hall_canonical_f_normalized(seg))

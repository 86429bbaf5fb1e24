"""
Straightening wedge words
=========================

A wedge word is any tuple of integers.  Modulo the q-antisymmetrizer every
word is a combination of strictly decreasing words, and ``straighten``
computes that combination exactly.
"""
from qfock import straighten
from qfock.cli import render_combination
from qfock.heckewedge import quotient_oracle

# equal neighbours vanish, decreasing words are already normal
print(render_combination(straighten((0, 0), 2)))
print(render_combination(straighten((2, -1), 2)))

# an increasing pair at level 2 picks up a correction term
print(render_combination(straighten((-1, 2), 2)))

# the same answer by brute force: row-reduce the antisymmetrizer relations
# on every word with entries in [-3, 3] and read off the normal form
oracle = quotient_oracle(2, 2, -3, 3)
print(render_combination(oracle.reduce((-1, 2))))
print("quotient dimension", oracle.dimension())

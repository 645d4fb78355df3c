"""
Full matrix algebras as crossed products by partial actions.

A subset A of G containing 1 gives an elementary partial representation
into M_n(KH), H the stabilizer of A and n the number of its translates
that contain 1. The crossed product of the induced action on the diagonal
is isomorphic to the whole matrix algebra; injectivity comes from the
diagonal conditional expectation. Matrix units are homogeneous for the
grading by G.
"""

import itertools

from pact.exactfield import QQ
from pact.groups import cyclic, klein_four, symmetric
from pact.preps import elementary_grading, elementary_rep, induced_action, iso_bis, transitivity_witness

cases = [
    (cyclic(3), ["1", "g"]),
    (cyclic(4), ["1", "g", "g^2"]),
    (klein_four(), ["1", "a", "b"]),
    (cyclic(6), ["1", "g", "g^3", "g^4"]),
    (symmetric(3), ["1", "(12)", "(123)", "(13)"]),
]
for G, subset in cases:
    erd = elementary_rep(G, subset, QQ)
    ib = iso_bis(erd)
    ind = induced_action(erd.pi)
    moves = {f"{i}{j}": transitivity_witness(erd, i, j, ind)
             for i, j in itertools.product(range(1, erd.n + 1), repeat=2)}
    gr = elementary_grading(erd, ib)
    print(f"G of order {G.order}, A = {{{', '.join(subset)}}}")
    print(f"  target {erd.target_name()} (dim {erd.target.dim}), iso: {ib.iso},"
          f" expectation criterion applies: {ib.expectation.applicable}")
    print(f"  e_ii -> e_jj moved by: {moves}")
    print(f"  degrees: {gr.degrees}")

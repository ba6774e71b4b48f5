"""Exact domination and packing numbers with optimal witnesses.

gamma(G) is the least size of a set whose closed neighborhoods cover V(G);
rho(G) the largest set of vertices pairwise at distance >= 3.  Both solvers
are exact branch and bound; every value below is accompanied by a witness
that the checkers in gammarho.graphs re-verify.
"""

from gammarho.generators import (
    gen_cycle,
    gen_path,
    gen_rook,
    gen_sun,
    heawood,
    petersen,
)
from gammarho.graphs import is_dominating, is_packing
from gammarho.solvers import (
    cycle_gamma,
    cycle_rho,
    domination_number,
    packing_number,
    path_gamma,
    path_rho,
)

named = [
    ("petersen", petersen()),
    ("heawood", heawood()),
    ("rook 4x4", gen_rook(4)),
    ("hexagonal sun", gen_sun()),
    ("C4", gen_cycle(4)),
]

print("graph            n   gamma rho   dominating set / packing")
for name, g in named:
    gam = domination_number(g)
    rho = packing_number(g)
    assert is_dominating(g, gam.witness)
    assert is_packing(g, rho.witness)
    print(f"{name:<15} {g.n:>3}   {gam.value:>3} {rho.value:>3}   "
          f"{list(gam.witness)} / {list(rho.witness)}")

# rho <= gamma always; the rook graph shows the gap can reach Delta
rook = gen_rook(4)
print(f"\nrook 4x4: gamma = {domination_number(rook).value}, "
      f"rho = {packing_number(rook).value}, Delta = {rook.max_degree()}")

# paths and cycles have closed forms; the solver reproduces them
for n in (7, 10, 13):
    p, c = gen_path(n), gen_cycle(n)
    assert domination_number(p).value == path_gamma(n) == (n + 2) // 3
    assert packing_number(p).value == path_rho(n)
    assert domination_number(c).value == cycle_gamma(n)
    assert packing_number(c).value == cycle_rho(n)
print("closed forms for paths and cycles reproduced for n = 7, 10, 13")

"""Idempotents, maximal subgroups, viability and the semilattice reflection."""

import json

from semiclose import invariants as inv
from semiclose import kernel
from semiclose.fixtures import LZ2, M21, N2, Z3, monogenic

# %% Each element of a finite semigroup has an index and a period.
M = monogenic(3, 4)
d = inv.monogenic_data(M, 0)
print(f"x in M(3,4): index {d.index}, period {d.period}, idempotent power x^{d.idempotent_power}")

# %% Maximal subgroups and the Clifford part.
S = kernel.direct_product(M21, Z3)
for e, H in inv.maximal_subgroups(S).items():
    print(f"H_{S.name(e)} has order {len(H)}")
print("Clifford part:", sorted(inv.clifford_part(S)), "of", S.order, "elements")

# %% The exponent is the least n with every x^n idempotent.  Here the
# elementwise least powers are 2 and 3, yet n = 3 already works for all.
print("exponent of M21 x Z3:", inv.exponent_of(S), "(search:", inv.exponent_by_search(S), ")")

# %% Viable idempotents: in the left-zero band neither idempotent is viable.
print("VE(LZ2) =", sorted(inv.viable_idempotents(LZ2)))
print("VE(N2)  =", sorted(inv.viable_idempotents(N2)))

# %% The semilattice reflection is the quotient by the smallest semilattice congruence.
R = inv.semilattice_reflection(kernel.direct_product(M21, kernel.zero_extension(Z3)))
print("reflection order:", R.reflection.order, "projection:", R.projection.image)

# %% Everything at once, as the CLI prints it.
print(json.dumps(inv.structure_report(N2), indent=1))

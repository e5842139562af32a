"""Cayley tables: validation, ideals, quotients and products.

Run with ``python3 demos/01_tables_and_quotients.py``.
"""

from semiclose import kernel
from semiclose.fixtures import LZ2, N2, S2, Z2, Z3, chain


def show(title, S):
    print(f"{title} (order {S.order})")
    for row in S.table:
        print("   ", " ".join(S.name(v) for v in row))


# %% A table is checked for range and associativity on the way in.
show("two-element semilattice", S2)
try:
    kernel.validate_table(2, [[1, 0], [0, 0]])
except kernel.NonAssociative as exc:
    print("rejected:", exc)

# %% Ideals, and the subsets whose indicator is a homomorphism onto {0, 1}.
print("{0} is an ideal of S2:", kernel.is_ideal(S2, {0}))
print("{x} is an ideal of the left-zero band:", kernel.is_ideal(LZ2, {0}))
for C in [set(), {0}, {1}, {0, 1}]:
    print(f"  {sorted(C)} prime coideal of S2: {kernel.is_prime_coideal(S2, C)}")

# %% Collapsing an ideal gives the Rees quotient.
Q, q = kernel.rees_quotient(chain(4), {0, 1})
show("4-chain with its two bottom elements collapsed", Q)
print("projection:", q.image)

# %% Congruences come from a union-find closure of generating pairs.
c = kernel.generated_congruence(Z3, [(1, 0)])
print("identifying a with e in Z3 leaves", c.num_classes, "class")
K = kernel.direct_product(Z2, Z2)
Q, q = kernel.quotient(K, kernel.generated_congruence(K, [(1, 2)]))
show("Klein group modulo the diagonal", Q)

# %% Adjoining a zero or an identity.
show("Z2 with a zero", kernel.zero_extension(Z2))
show("null semigroup with an identity", kernel.one_extension(N2))

"""Monomial products two ways, then basis conversions.

The product of two monomial elements expands with integer coefficients
counted by signed fillings of circled diagrams.  The engine multiply gives
the same table, which is the cross-check the test suite leans on.
"""

from supersym import SuperPartition
from supersym.bases import monomial
from supersym.transform import (
    BasisExpansion,
    change_basis,
    expand_in_monomials,
    mono_product,
    triangularity,
)

a = SuperPartition.parse("(1,0;1)")
b = SuperPartition.parse("(0;2,1,1)")
print(f"m_{a} * m_{b} via signed fillings:")
table = mono_product(a, b)
for la, c in table.items_sorted():
    print(f"   {la}  {c}")

n, m = table.n, table.m
engine = expand_in_monomials(monomial(a, n + m) * monomial(b, n + m), (n, m))
print("engine expansion agrees:", engine == table)

print("\ne_2 in the power-sum basis needs denominators:")
x = change_basis(BasisExpansion.unit("e", SuperPartition.parse("(;2)")), "p")
for la, c in x.items_sorted():
    print(f"   {la}  {c}")

print("\nround trip through every basis:")
y = BasisExpansion.unit("h", SuperPartition.parse("(2,0;1)"))
z = y
for dst in ("m", "p", "e", "h"):
    z = change_basis(z, dst)
print("   h -> m -> p -> e -> h unchanged:", z == y)

print("\narrowed e-elements expand unitriangularly over the order:")
rep = triangularity(5)
print("   n <= 5:", rep["pass"], "| nonneg coefficients observed:", rep["nonneg_surmise_holds"])

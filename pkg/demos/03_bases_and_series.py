"""The four classical families and their generating series.

Each family has a bosonic member and a fermionic (tilde) member; products
indexed by superpartitions put the tilde factors first, in order.
"""

from supersym import SuperPartition
from supersym.bases import (
    basis_element,
    complete_tilde,
    elementary_tilde,
    generating_check,
    monomial,
    powersum_tilde,
)

print("monomial m_(1,0;) at N=2 shows the antisymmetry of the theta sector:")
print("  ", monomial(SuperPartition.parse("(1,0;)"), 2).render())

print("\nfermionic generators at N=3:")
print("  te_2 =", elementary_tilde(2, 3).render())
print("  tp_1 =", powersum_tilde(1, 3).render())
print("  th_1 =", complete_tilde(1, 3).render())

la = SuperPartition.parse("(1,0;2)")
print("\nh indexed by", la, "at N=4 is th_1 * th_0 * h_2:")
f = basis_element("h", la, 4)
print("   terms:", f.num_terms(), "| symmetric:", f.is_symmetric())

print("\ngenerating-series checks (coefficients of t^n and tau t^n):")
for kind, label in [
    ("E", "product of (1 + t x_i + tau theta_i)"),
    ("H", "product of 1/(1 - t x_i - tau theta_i)"),
    ("P", "log-derivative sum"),
    ("HE", "H(t,tau) E(-t,-tau) = 1"),
    ("HP", "P picks out the degree operator on H"),
    ("EP", "and minus the degree operator on E"),
]:
    rep = generating_check(kind, 3, 4)
    print(f"  {kind:2} {label}: pass={rep['pass']}")

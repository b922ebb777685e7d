"""Exactness reports for the Crowell sequence and a search for middle-exactness failures."""

from alexmod.abelian import AbelianGroup
from alexmod.coverings import gamma_presentation
from alexmod.crowell import (c1_middle_exactness_search, check_crowell_exactness,
                             crowell_sequence, phi3_kernel_check)
from alexmod.finite_groups import (cyclic_table, d4_table, q8_table, s3_table, table_hom)
from alexmod.presentations import AbelianHom

P = gamma_presentation((3, 3, 3))
Z3 = AbelianGroup.cyclic(3)
psi = AbelianHom(P, Z3, [Z3.element(torsion=[1])] * 3)
print(check_crowell_exactness(crowell_sequence(P, psi)).format_text())
print()
print(phi3_kernel_check(P, psi, samples=50, seed=0).format_text())
print()

Z2, K4 = AbelianGroup.cyclic(2), AbelianGroup(0, (2, 2))
z2 = [Z2.element(torsion=[0]), Z2.element(torsion=[1])]
k4 = [K4.element(torsion=[1, 0]), K4.element(torsion=[0, 1])]
cases = [(label, T, table_hom(T, H, gens), H) for label, T, H, gens in [
    ("S3", s3_table(), Z2, z2),
    ("D4", d4_table(), K4, k4),
    ("Q8", q8_table(), K4, k4),
    ("Z4", cyclic_table(4), Z2, z2[1:]),
]]
rep = c1_middle_exactness_search(cases)
print(rep.format_text())
for s in rep.sites:
    print(f"  witness for {s.name}: {s.witness}")

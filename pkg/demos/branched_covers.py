"""Homology of abelian branched covers of the sphere, with the deck group action."""

from alexmod.abelian import AbelianGroup
from alexmod.coverings import cover_homology, cyclic_ramification, ramification_from_hom

K = AbelianGroup(0, (2, 2))
covers = [
    ("hyperelliptic, six points", cyclic_ramification((2,) * 6, 2)),
    ("elliptic, four points", cyclic_ramification((2,) * 4, 2)),
    ("elliptic, Z/3", cyclic_ramification((3, 3, 3), 3)),
    ("elliptic, Z/4", cyclic_ramification((4, 4, 2), 4, (1, 1, 2))),
    ("Klein four over three points",
     ramification_from_hom((2, 2, 2), K, [K.element(torsion=[1, 0]), K.element(torsion=[0, 1]),
                                          K.element(torsion=[1, 1])])),
]

for label, rd in covers:
    cr = cover_homology(rd)
    traces = [cr.traces[h] for h in cr.deck_group.elements()]
    print(f"{label}: indices {rd.indices}, deck group {cr.deck_group}")
    print(f"    H_1 = {cr.homology}, genus {cr.genus}, traces {traces}")
    for w in cr.warnings:
        print(f"    warning: {w}")

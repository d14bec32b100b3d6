"""Tour of the combinatorial layer: root systems and Weyl groups.

Run:  python demos/01_roots_and_weyl.py
"""

from qborel.rootsys import bilinear, build_root_system, height, reflect
from qborel.weyl import (
    ReducedWord,
    all_reduced_words,
    bruhat_le,
    canonical_word,
    from_word,
    weyl_bruhat_equiv,
    weyl_group,
)

for label in ("A2", "B2", "G2"):
    rs = build_root_system(label)
    print(f"== {label} ==")
    print("  Cartan matrix:", rs.cartan)
    print("  symmetrizers d:", rs.d)
    print("  positive roots (height order):")
    for beta in rs.pos_roots:
        print(f"    {beta}  ht={height(rs, beta)}  (beta,beta)={bilinear(rs, beta, beta)}")
    print()

# reflections act on the root lattice
rs = build_root_system("B2")
a1, a2 = rs.simple(1), rs.simple(2)
print("B2: s_1(a2) =", reflect(rs, a1, a2), " s_2(a1) =", reflect(rs, a2, a1))
print()

# the Weyl group, its longest element, and reduced words
rs = build_root_system("A2")
group = weyl_group(rs)
print(f"A2 Weyl group has {len(group)} elements:")
for g in sorted(group, key=lambda g: (g.length, canonical_word(g))):
    words = all_reduced_words(g)
    print(f"  length {g.length}  word {canonical_word(g) or '()'}  ({len(words)} reduced words)")
print()

w0 = max(group, key=lambda g: g.length)
word = ReducedWord(rs, canonical_word(w0))
print("longest element w0: word", word.letters)
print("inversion roots, in word order:", word.roots)
print()

# Bruhat order: s1 <= w0 but w0 </= s1
s1 = from_word(rs, (1,))
print("s1 <= w0:", bruhat_le(s1, w0), "   w0 <= s1:", bruhat_le(w0, s1))

# three equivalent ways to test that a reflection shortens an element
beta = (1, 1)
print(f"descent tests for (w0, beta={beta}):", weyl_bruhat_equiv(w0, beta))

"""Straighten monomials of divided powers and look for the unit coefficient.

Run: python3 demos/tight_monomials.py
"""

from canonparam.cones import cone_spec
from canonparam.pbw import l_order, root_vector_expand, straighten, tight_check
from canonparam.words import commutation_classes, format_word


def main():
    print("F13 =", root_vector_expand(1, 3))
    print("F12 F23 in l-order", l_order(2), ":")
    for vec, c in straighten([((1, 2), 1), ((2, 3), 1)], 2).items():
        print("  ", vec, c)

    for c in commutation_classes(4)[:6]:
        word = c.representative
        a = tuple(sum(row) for row in cone_spec(word, 4).Q)
        r = tight_check(word, a)
        print(f"{format_word(word)}  a={format_word(a)}  terms={r.terms:5d}  "
              f"unit term {r.witness} coefficient {r.coefficient}  ok={r.ok}")


if __name__ == "__main__":
    main()

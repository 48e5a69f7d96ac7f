"""Follow one string vector through the adapted words, region by region.

Run: python3 demos/worked_trace.py
"""

from canonparam.cones import cone_spec
from canonparam.plmap import locate_region
from canonparam.strings import string_to_target, string_trace
from canonparam.pbw import l_word
from canonparam.words import format_word

WORD = (3, 2, 1, 4, 3, 2, 3, 4, 1, 3)


def main():
    spec = cone_spec(WORD, 4)
    a = tuple(sum(row) for row in spec.Q)  # every spanning vector once
    print("word", format_word(WORD))
    print("string vector", format_word(a))
    for t, step in enumerate(string_trace(WORD, a), 1):
        line = f"c{t:<3} {step.state.form:<3} {step.note:<7} {format_word(step.state.coords)}"
        if step.locate:
            best, matches = locate_region(step.state.coords)
            line += f"   region {best}" + (f" (also {matches[1:]})" if len(matches) > 1 else "")
        print(line)
    print("exponents for l:", format_word(string_to_target(WORD, l_word(4), a)))


if __name__ == "__main__":
    main()

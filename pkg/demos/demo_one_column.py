"""One-column puzzles as words: the grammar decision and its derivations.

A one-column board read bottom to top is a word; runs of equal colors
are its groups.  Solvability of the word is membership in a small
context-free language, decided here by parsing.
"""

from clickomania.enumeration import iter_words
from clickomania.grammar import decide_cfg
from clickomania.words import word_from_text, word_to_text

print("Words and their solvability:")
for text in ("aabb", "ab", "a:1,b:1,c:3,b:1,a:1", "a:1,b:1,a:1", "a:1,b:2,a:1"):
    word = word_from_text(text)
    decision = decide_cfg(word)
    print(f"  {word_to_text(word):24} -> {'solvable' if decision.solvable else 'unsolvable'}")
print()

# A derivation explains a yes answer: each matched span clears on its
# own once its inner spans are gone.  Runs longer than three behave
# exactly like runs of three, so derivations cap them.
word = word_from_text("a:1,b:5,a:1")
decision = decide_cfg(word)
print(f"Derivation spans for {word_to_text(word)} (runs capped at 3):")
print(" ", decision.derivation)
print("  capped runs:", decision.capped)
print()

print("Count of solvable words by block count (2 colors):")
by_length: dict[int, list[int]] = {}
for word in iter_words(2, 10):
    total, solvable = by_length.setdefault(word.length, [0, 0])
    by_length[word.length][0] = total + 1
    if decide_cfg(word, with_derivation=False).solvable:
        by_length[word.length][1] = solvable + 1
for length in sorted(by_length):
    total, solvable = by_length[length]
    print(f"  {length:2} blocks: {solvable:4}/{total:4} solvable")

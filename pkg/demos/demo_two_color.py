"""Two colors, linear time: singleton stretches decide everything.

With two colors a word is just its sequence of group sizes, and the
question reduces to how long the runs of singleton groups are.  The
decision is one scan; this script shows the rule, a certifying plan,
and the linear scaling.
"""

import time
from random import Random
from statistics import median

from clickomania.engine import replay
from clickomania.enumeration import random_two_color_word
from clickomania.twocolor import certifying_split, decide_two_color, two_color_solution
from clickomania.words import word_from_text, word_to_board, word_to_text

print("The tipping point, one singleton stretch at a time:")
for text in ("a:1,b:2,a:1", "a:2,b:1,a:2", "a:2,b:1,a:2,b:1,a:2", "a:2,b:1,a:1,b:1,a:2"):
    word = word_from_text(text)
    answer = "solvable" if decide_two_color(word) else "unsolvable"
    print(f"  {word_to_text(word):22} -> {answer}")
print()

# Even-length words must split into two odd solvable halves; the split
# index is the certificate.
word = word_from_text("a:2,b:2,a:1,b:2")
print(f"{word_to_text(word)} splits after group index {certifying_split(word)}")
solution = two_color_solution(word)
final, removed = replay(word_to_board(word), solution)
print(f"its plan removes {removed} blocks in {len(solution)} clicks:",
      [m.cell for m in solution])
print()

print("Scaling (median decision time, construction excluded):")
rng = Random(0)
decide_two_color(random_two_color_word(100_000, rng))  # warm up
for blocks in (25_000, 50_000, 100_000):
    times = []
    for _ in range(15):
        word = random_two_color_word(blocks, rng)
        t0 = time.perf_counter()
        decide_two_color(word)
        times.append(time.perf_counter() - t0)
    print(f"  {blocks:7} blocks: {median(times) * 1000:7.2f} ms")

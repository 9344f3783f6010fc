"""Regenerates data/lexicon.tsv from the wordfreq English word list.

    pip install wordfreq==3.1.1
    python3 tools/make_lexicon.py > data/lexicon.tsv
"""
import re
import sys

from wordfreq import top_n_list, word_frequency

N = 200000
KEEP_SHORT = {"a", "i"}


def main():
    seen = set()
    out = sys.stdout
    out.write("# WORD<TAB>occurrences per billion words (wordfreq 3.1.1, CC BY-SA 4.0)\n")
    for w in top_n_list("en", N):
        if not re.fullmatch(r"[a-z]+", w) or len(w) > 15:
            continue
        if len(w) == 1 and w not in KEEP_SHORT:
            continue
        u = w.upper()
        if u in seen:
            continue
        seen.add(u)
        out.write(f"{u}\t{word_frequency(w, 'en') * 1e9:.6g}\n")


if __name__ == "__main__":
    main()

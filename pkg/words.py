"""
Word combinatorics for hopfwords

Words are tuples of positive integers. The empty tuple is the empty word,
the unit of every algebra built on words.
"""
import itertools
from collections import Counter
from functools import lru_cache
from typing import NamedTuple

from freemod import Elem


class InvalidWordError(ValueError):
    """Raised for letters that are not positive integers"""


class WordStats(NamedTuple):
    length: int
    weight: int
    height: int
    support: frozenset
    multisupport: Counter


def make_word(seq):
    """Validate a sequence of letters and return it as a word tuple"""
    word = tuple(seq)
    for letter in word:
        if isinstance(letter, bool) or not isinstance(letter, int):
            raise InvalidWordError(f"Letter {letter!r} is not an integer")
        if letter < 1:
            raise InvalidWordError(f"Letter {letter} is not a positive integer")
    return word


def stats(word):
    """Length, weight, height, support and multisupport of a word"""
    return WordStats(length=len(word),
                     weight=sum(word),
                     height=max(word, default=0),
                     support=frozenset(word),
                     multisupport=Counter(word))


def weight(word):
    return sum(word)


def height(word):
    return max(word, default=0)


def content(word):
    """Number of distinct letters"""
    return len(set(word))


def is_injective_word(word):
    return len(set(word)) == len(word)


def is_surjective_word(word):
    """No gaps: the support is {1..k}"""
    return set(word) == set(range(1, len(set(word)) + 1))


def is_permutation_word(word):
    return sorted(word) == list(range(1, len(word) + 1))


def shift(word, k):
    return tuple(letter + k for letter in word)


@lru_cache(maxsize=None)
def _shuffle_counts(a, b):
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    counts = Counter()
    for word, mult in _shuffle_counts(a[1:], b):
        counts[(a[0],) + word] += mult
    for word, mult in _shuffle_counts(a, b[1:]):
        counts[(b[0],) + word] += mult
    return tuple(counts.items())


def shuffle(a, b):
    """Shuffle product with multiplicities: one term per index interleaving"""
    return Elem(_shuffle_counts(tuple(a), tuple(b)))


@lru_cache(maxsize=None)
def _overlapping_shuffle_counts(a, b):
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    counts = Counter()
    for word, mult in _overlapping_shuffle_counts(a[1:], b):
        counts[(a[0],) + word] += mult
    for word, mult in _overlapping_shuffle_counts(a, b[1:]):
        counts[(b[0],) + word] += mult
    for word, mult in _overlapping_shuffle_counts(a[1:], b[1:]):
        counts[(a[0] + b[0],) + word] += mult
    return tuple(counts.items())


def overlapping_shuffle(a, b):
    """Quasi-shuffle: interleavings in which collided letters are added"""
    return Elem(_overlapping_shuffle_counts(tuple(a), tuple(b)))


def cuts(word):
    """All lg+1 splittings into prefix and suffix, shortest prefix first"""
    word = tuple(word)
    return [(word[:i], word[i:]) for i in range(len(word) + 1)]


def good_cuts(word):
    """Cuts whose two halves have disjoint supports"""
    return [(left, right) for left, right in cuts(word)
            if not set(left) & set(right)]


def subwords_with_complement(word):
    """Every index subset as (subword, complementary subword), binary counter order"""
    word = tuple(word)
    pairs = []
    for mask in range(2 ** len(word)):
        chosen = tuple(letter for i, letter in enumerate(word) if mask >> i & 1)
        rest = tuple(letter for i, letter in enumerate(word) if not mask >> i & 1)
        pairs.append((chosen, rest))
    return pairs


def restrict(word, letters):
    """The maximal subword using only the given letters"""
    return tuple(letter for letter in word if letter in letters)


def standardize(word):
    """Schensted standardization; equal letters are numbered left to right"""
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    result = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        result[i] = rank
    return tuple(result)


def surjective_standardize(word):
    """Relabel the support monotonically onto {1..content}"""
    relabel = {letter: i for i, letter in enumerate(sorted(set(word)), start=1)}
    return tuple(relabel[letter] for letter in word)


@lru_cache(maxsize=None)
def compositions(n):
    """All words of weight n in basis order"""
    if n == 0:
        return ((),)
    found = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            found.append((first,) + rest)
    return tuple(sorted(found, key=lambda w: (len(w), w)))


def compositions_up_to(n):
    return [word for k in range(n + 1) for word in compositions(k)]


def words_up_to(length, max_letter):
    """All words of length at most ``length`` over {1..max_letter}"""
    found = []
    for k in range(length + 1):
        found.extend(itertools.product(range(1, max_letter + 1), repeat=k))
    return found


def format_word(word):
    return "[" + ",".join(str(letter) for letter in word) + "]"

"""
The word Hopf algebra for hopfwords

WHA has all words as basis. A word is the same thing as a substitution whose
top word is a staircase [1^r1, 2^r2, ..., k^rk]; the product is
shuffling against a shifted copy and the coproduct is transported from dWHA.
"""
import random

from dwha import Subst, canonicalize, check_compose_stability, dwha_comul, dwha_compose, dwha_mul, subst_action
from freemod import Elem, TensorElem
from hopf import HopfDef, Report, finish
from logging_manager import add_log
from words import compositions_up_to, good_cuts, height, is_injective_word, is_surjective_word, make_word, \
    shift, shuffle, standardize, surjective_standardize, weight, words_up_to


class NotStaircaseError(ValueError):
    """Raised when decoding a substitution whose top word is not a staircase"""


def encode(word):
    """The staircase substitution of a word"""
    word = make_word(word)
    support = sorted(set(word))
    top = []
    previous = 0
    for index, letter in enumerate(support, start=1):
        top.extend([index] * (letter - previous))
        previous = letter
    position = {letter: index for index, letter in enumerate(support, start=1)}
    return Subst(tuple(top), tuple(position[letter] for letter in word))


def is_wha(p):
    """Equal letters of the top word are contiguous"""
    seen = set()
    previous = None
    for letter in p.top:
        if letter != previous:
            if letter in seen:
                return False
            seen.add(letter)
            previous = letter
    return True


def decode(p):
    """Inverse of encode: letter i of the bottom becomes r1 + ... + ri"""
    if not is_wha(p):
        raise NotStaircaseError(f"{p.render()} does not have a staircase top word")
    p = canonicalize(p.top, p.bottom)
    partial = {}
    total = 0
    for letter in p.top:
        total += 1
        partial[letter] = total
    return tuple(partial[letter] for letter in p.bottom)


def wha_mul(a, b):
    return shuffle(a, shift(b, height(a)))


def wha_comul(word):
    return dwha_comul(encode(word)).map_keys(lambda key: (decode(key[0]), decode(key[1])))


def wha_action(a, w):
    """The action of a word on Shuffle through its staircase substitution"""
    return subst_action(encode(a), w)


def wha_compose(a, b):
    """Composition of substitutions restricted to staircase substitutions"""
    return dwha_compose(encode(a), encode(b)).map_keys(decode)


def std_surj_retract(word):
    return surjective_standardize(word)


def schensted_to_mpr(word):
    return standardize(word)


def _weight_enumeration(bound, cap):
    return compositions_up_to(bound)


def wha_def(grading="height", max_letter=None, family=None):
    """WHA graded by height (default) or by length

    Keys are enumerated by weight under the height grading. Under the length
    grading they are enumerated by length with letters at most max_letter.
    family restricts the enumeration to 'injective' or 'surjective' words.
    """
    keep = {None: lambda w: True,
            'injective': is_injective_word,
            'surjective': is_surjective_word}[family]
    if grading == "height":
        degree, size = height, weight

        def enumerate_keys(bound, cap):
            return [w for w in _weight_enumeration(bound, cap) if keep(w)]
    elif grading == "length":
        if max_letter is None:
            raise ValueError("Length grading needs a letter cap")
        degree, size = len, len

        def enumerate_keys(bound, cap):
            return [w for w in words_up_to(bound, max_letter) if keep(w)]
    else:
        raise ValueError(f"Unknown WHA grading: {grading}")
    name = {None: 'wha', 'injective': 'wha_inj', 'surjective': 'wha_surj'}[family]
    return HopfDef(name=name, degree=degree, size=size, enumerate=enumerate_keys,
                   product=wha_mul, coproduct=wha_comul, unit=())


def st_map(word):
    return Elem.basis(schensted_to_mpr(word))


def std_surj_map(word):
    return Elem.basis(std_surj_retract(word))


def encode_map(word):
    return Elem.basis(encode(word))


def _block_relabel(word, letters):
    """Relabel letters by the summed staircase blocks of the kept letters"""
    support = sorted(set(word))
    total = 0
    relabel = {}
    previous = 0
    for letter in support:
        if letter in letters:
            total += letter - previous
            relabel[letter] = total
        previous = letter
    return relabel


def wha_comul_direct(word):
    """Word-level coproduct: good cuts of the word, each half relabelled by blocks"""
    terms = []
    for left, right in good_cuts(word):
        lmap = _block_relabel(word, set(left))
        rmap = _block_relabel(word, set(right))
        terms.append(((tuple(lmap[x] for x in left), tuple(rmap[x] for x in right)), 1))
    return TensorElem(terms)


def wha_mul_via_dwha(a, b):
    return dwha_mul(encode(a), encode(b)).map_keys(decode)


def random_composition(rng, n):
    """A uniformly random composition of n"""
    if n == 0:
        return ()
    cuts_at = [i for i in range(1, n) if rng.random() < 0.5]
    points = [0] + cuts_at + [n]
    return tuple(b - a for a, b in zip(points, points[1:]))


def check_wha_oracle(samples=500, max_weight=8, seed=2004):
    """Word-level WHA operations against decode∘dWHA∘encode on random words"""
    rng = random.Random(seed)
    report = Report(suite="wha oracle", subject="wha vs dwha", bound=max_weight)
    add_log(f"Checking {samples} random WHA samples up to weight {max_weight}")
    for _ in range(samples):
        first = rng.randint(0, max_weight)
        a = random_composition(rng, first)
        b = random_composition(rng, rng.randint(0, max_weight - first))
        if not report.expect("word product = transported dWHA product", [a, b], wha_mul(a, b),
                             wha_mul_via_dwha(a, b)):
            return finish(report)
        if not report.expect("word coproduct = transported dWHA coproduct", [a], wha_comul_direct(a),
                             wha_comul(a)):
            return finish(report)
    return finish(report)


def check_wha_stability(degree_bound, cap):
    """Compositions of staircase substitutions are staircase substitutions"""
    return check_compose_stability("wha", is_wha, degree_bound, cap)

"""
Substitutions and the double word Hopf algebra for hopfwords

A substitution is a pair of words (top | bottom) with equal support, taken up
to relabelling of letters. The canonical representative numbers the letters
1..k in order of first occurrence in the top word.
"""
import itertools
from collections import Counter
from dataclasses import dataclass

from freemod import Elem, TensorElem
from hopf import HopfDef, Report, finish
from logging_manager import add_log
from words import format_word, good_cuts, is_injective_word, restrict, shift, shuffle


class SupportMismatchError(ValueError):
    """Raised when top and bottom words do not have the same support"""


@dataclass(frozen=True)
class Subst:
    """A canonical substitution; build one with canonicalize()"""
    top: tuple
    bottom: tuple

    @property
    def degree(self):
        return len(set(self.top))

    def sort_key(self):
        return ((len(self.top), self.top), (len(self.bottom), self.bottom))

    def render(self):
        return f"({format_word(self.top)} | {format_word(self.bottom)})"

    def to_json(self):
        return {"top": list(self.top), "bottom": list(self.bottom)}

    def __str__(self):
        return self.render()


EMPTY = Subst((), ())


def canonicalize(top, bottom):
    """Relabel letters by first occurrence in the top word"""
    top, bottom = tuple(top), tuple(bottom)
    if set(top) != set(bottom):
        raise SupportMismatchError(
            f"Top {list(top)} and bottom {list(bottom)} have different supports")
    relabel = {}
    for letter in top:
        relabel.setdefault(letter, len(relabel) + 1)
    return Subst(tuple(relabel[x] for x in top), tuple(relabel[x] for x in bottom))


def degree(p):
    return p.degree


def dwha_mul(p, q):
    """Concatenate tops and shuffle bottoms after making the supports disjoint"""
    k = p.degree
    top = p.top + shift(q.top, k)
    return Elem((Subst(top, gamma), coeff)
                for gamma, coeff in shuffle(p.bottom, shift(q.bottom, k)).items())


def dwha_comul(p):
    """Sum over the good cuts of the bottom word"""
    terms = []
    for left, right in good_cuts(p.bottom):
        terms.append(((canonicalize(restrict(p.top, set(left)), left),
                       canonicalize(restrict(p.top, set(right)), right)), 1))
    return TensorElem(terms)


def swap(p):
    return canonicalize(p.bottom, p.top)


def dwha_mul2(p, q):
    """Second product, transported through swap"""
    return dwha_mul(swap(p), swap(q)).map_keys(swap)


def dwha_comul2(p):
    """Second coproduct, transported through swap"""
    return dwha_comul(swap(p)).map_keys(lambda key: (swap(key[0]), swap(key[1])))


def dwha_mul2_direct(p, q):
    """Shuffle the tops and concatenate the bottoms"""
    k = p.degree
    bottom = p.bottom + shift(q.bottom, k)
    return Elem((canonicalize(gamma, bottom), coeff)
                for gamma, coeff in shuffle(p.top, shift(q.top, k)).items())


def dwha_comul2_direct(p):
    """Sum over the good cuts of the top word"""
    terms = []
    for left, right in good_cuts(p.top):
        terms.append(((canonicalize(left, restrict(p.bottom, set(left))),
                       canonicalize(right, restrict(p.bottom, set(right)))), 1))
    return TensorElem(terms)


def inner_product(p, q):
    """1 if q is the swap of p, else 0"""
    return 1 if swap(q) == p else 0


def orthonormal(p, q):
    return 1 if p == q else 0


# Families

def _max_multiplicity(word):
    return max(Counter(word).values(), default=0)


def is_injective(p):
    return is_injective_word(p.bottom)


def is_surjective(p):
    return is_injective_word(p.top)


def is_msupp_equal(p):
    return Counter(p.top) == Counter(p.bottom)


def is_bounded(p, b):
    return _max_multiplicity(p.top) <= b and _max_multiplicity(p.bottom) <= b


def is_exact_multiplicity(p, b):
    """Every letter occurs exactly b times in both words"""
    counts = list(Counter(p.top).values()) + list(Counter(p.bottom).values())
    return all(c == b for c in counts)


def in_j_mult(p):
    """Basis element of the ideal spanned by substitutions with a repeated letter"""
    return not (is_injective_word(p.top) and is_injective_word(p.bottom))


FAMILIES = {
    'injective': is_injective,
    'surjective': is_surjective,
    'msupp': is_msupp_equal,
}


def family_predicate(name, b=None):
    """Predicate for a family name; bounded and exact take a multiplicity b"""
    if name == 'bounded':
        return lambda p: is_bounded(p, b)
    if name == 'exact':
        return lambda p: is_exact_multiplicity(p, b)
    return FAMILIES[name]


def project_mpr(p):
    """p as a permutation if neither word has a repeated letter, else 0"""
    if in_j_mult(p):
        return Elem.zero()
    return Elem.basis(p.bottom)


# Action on words and composition

def subst_action(p, w):
    """Substitute the letters of w into the bottom word along the top pattern"""
    if len(w) != len(p.top):
        return Elem.zero()
    value = {}
    for letter, x in zip(p.top, w):
        if value.setdefault(letter, x) != x:
            return Elem.zero()
    return Elem.basis(tuple(value[letter] for letter in p.bottom))


def apply_letter_map(images, w):
    """φ* on a word; images[i - 1] is the image of the letter i"""
    return tuple(images[x - 1] for x in w)


def dwha_compose(p, q):
    """First q, then p: (top of q | p applied to the bottom of q)"""
    image = subst_action(p, q.bottom)
    if not image:
        return Elem.zero()
    (word,) = image.keys()
    return Elem.basis(canonicalize(q.top, word))


def dwha_cocompose(r):
    """Cocomposition on the injective family

    Each arrangement s of the support gives the term (s | bottom) ⊗ (top | s).
    Outside the injective family the sum is infinite and is refused.
    """
    if not is_injective(r):
        raise ValueError(f"Cocomposition of {r.render()} is an infinite sum")
    terms = []
    for arrangement in itertools.permutations(sorted(set(r.top))):
        terms.append(((canonicalize(arrangement, r.bottom), canonicalize(r.top, arrangement)), 1))
    return TensorElem(terms)


# Enumeration

def _restricted_growth(length, k):
    """Words of the given length using exactly 1..k, first occurrences in order"""
    found = []

    def extend(prefix, current):
        if len(prefix) == length:
            if current == k:
                found.append(tuple(prefix))
            return
        if k - current > length - len(prefix):
            return
        for letter in range(1, min(current + 1, k) + 1):
            extend(prefix + [letter], max(current, letter))

    extend([], 0)
    return found


def _surjections(length, k):
    return [w for w in itertools.product(range(1, k + 1), repeat=length) if len(set(w)) == k]


def enumerate_substitutions(degree_bound, top_cap, bottom_cap):
    """Canonical substitutions with degree, top length and bottom length capped"""
    found = [EMPTY]
    for k in range(1, degree_bound + 1):
        for top_length in range(k, top_cap + 1):
            for top in _restricted_growth(top_length, k):
                for bottom_length in range(k, bottom_cap + 1):
                    for bottom in _surjections(bottom_length, k):
                        found.append(Subst(top, bottom))
    return found


def _enumerate(bound, cap):
    top_cap, bottom_cap = cap
    return enumerate_substitutions(bound, top_cap, bottom_cap)


def dwha_def():
    return HopfDef(name='dwha', degree=degree, enumerate=_enumerate,
                   product=dwha_mul, coproduct=dwha_comul, unit=EMPTY, finite_rank=False)


def dwha2_def():
    return HopfDef(name='dwha2', degree=degree, enumerate=_enumerate,
                   product=dwha_mul2, coproduct=dwha_comul2, unit=EMPTY, finite_rank=False)


def swap_map(p):
    return Elem.basis(swap(p))


# Checks

def check_second_structure(degree_bound, cap):
    """Swap-transported second structure against the direct formulas"""
    top_cap, bottom_cap = cap
    report = Report(suite="second structure oracle", subject="dwha2", bound=(degree_bound, top_cap, bottom_cap))
    add_log(f"Checking the second dWHA structure up to degree {degree_bound}, caps {cap}")
    keys = enumerate_substitutions(degree_bound, top_cap, bottom_cap)
    for p in keys:
        if not report.expect("transported = direct coproduct", [p], dwha_comul2(p), dwha_comul2_direct(p)):
            return finish(report)
    for p in keys:
        for q in keys:
            if p.degree + q.degree > degree_bound:
                continue
            if not report.expect("transported = direct product", [p, q], dwha_mul2(p, q), dwha_mul2_direct(p, q)):
                return finish(report)
    return finish(report)


def check_compose_stability(name, predicate, degree_bound, cap):
    """Compositions of members of a family stay in the family"""
    top_cap, bottom_cap = cap
    report = Report(suite="composition stability", subject=name, bound=(degree_bound, top_cap, bottom_cap))
    members = [p for p in enumerate_substitutions(degree_bound, top_cap, bottom_cap) if predicate(p)]
    for p in members:
        for q in members:
            outside = [r for r in dwha_compose(p, q) if not predicate(r)]
            if not report.expect("composition stays in the family", [p, q], outside, []):
                return finish(report)
    return finish(report)


def check_cocompose(degree_bound, cap):
    """Cocomposition on injective substitutions is dual to composition

    Both directions run over injective p and q only. Two substitutions with
    repeated bottom letters can compose to an injective one, e.g.
    ([1,1] | [1]) after ([1] | [1,1]) gives ([1] | [1]), and cocomposition
    never produces such pairs.
    """
    top_cap, bottom_cap = cap
    report = Report(suite="cocomposition", subject="dwha (injective)", bound=(degree_bound, top_cap, bottom_cap))
    keys = enumerate_substitutions(degree_bound, top_cap, bottom_cap)
    for r in keys:
        if not is_injective(r):
            continue
        for (p, q), coeff in dwha_cocompose(r).items():
            if not report.expect("each cocomposition term composes back", [r, p, q], dwha_compose(p, q),
                                 Elem.basis(r)):
                return finish(report)
    injective = [p for p in keys if is_injective(p)]
    for p in injective:
        for q in injective:
            for r in dwha_compose(p, q):
                if not report.expect("composition terms appear in the cocomposition",
                                     [p, q, r], dwha_cocompose(r).coefficient((p, q)), 1):
                    return finish(report)
    return finish(report)


def check_exact_multiplicity(b, degree_bound, cap):
    """Products and coproducts of exact multiplicity b substitutions keep multiplicity b"""
    top_cap, bottom_cap = cap
    report = Report(suite="exact multiplicity family", subject=f"dwha(={b})",
                    bound=(degree_bound, top_cap, bottom_cap))
    members = [p for p in enumerate_substitutions(degree_bound, top_cap, bottom_cap)
               if is_exact_multiplicity(p, b)]
    for p in members:
        outside = [pair for pair in dwha_comul(p) if not all(is_exact_multiplicity(x, b) for x in pair)]
        if not report.expect("coproduct stays in the family", [p], outside, []):
            return finish(report)
        for q in members:
            outside = [r for r in dwha_mul(p, q) if not is_exact_multiplicity(r, b)]
            if not report.expect("product stays in the family", [p, q], outside, []):
                return finish(report)
    return finish(report)


def check_pattern_homogeneity(degree_bound, cap, alphabet=3):
    """φ*∘p = p∘φ* for every letter map φ of {1..alphabet}

    A non-injective φ can merge letter classes and complete the top pattern
    of p on a word that p kills, so for such φ only the words p does not
    kill are compared. Injective φ are compared on every test word.
    """
    top_cap, bottom_cap = cap
    report = Report(suite="pattern homogeneity", subject="dwha", bound=(degree_bound, top_cap, bottom_cap))
    add_log(f"Checking pattern homogeneity up to degree {degree_bound}, caps {cap}, alphabet {alphabet}")
    letters = range(1, alphabet + 1)
    maps = list(itertools.product(letters, repeat=alphabet))
    for p in enumerate_substitutions(degree_bound, top_cap, bottom_cap):
        for w in itertools.product(letters, repeat=len(p.top)):
            image = subst_action(p, w)
            for phi in maps:
                if not image and len(set(phi)) < alphabet:
                    continue
                lhs = image.map_keys(lambda word: apply_letter_map(phi, word))
                rhs = subst_action(p, apply_letter_map(phi, w))
                if not report.expect("φ* p = p φ*", [p, w, phi], lhs, rhs):
                    return finish(report)
    return finish(report)

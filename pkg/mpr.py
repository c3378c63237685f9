"""
The Hopf algebra of permutations for hopfwords

Both structures on MPR: (m, μ) shuffles and cuts, (m′, μ′) is its transport
through inversion. Also the dWHA embedding, composition, cocomposition and
the two inner products.
"""
import itertools
from functools import lru_cache

from dwha import Subst, dwha_cocompose
from freemod import Elem, TensorElem, bilinear_extend, linear_extend, tensor_map
from hopf import HopfDef, Report, finish
from words import cuts, is_permutation_word, shift, shuffle, standardize


class NotAPermutationError(ValueError):
    """Raised when a word is not a permutation of 1..n"""


def make_perm(seq):
    perm = tuple(seq)
    if not is_permutation_word(perm):
        raise NotAPermutationError(f"{list(perm)} is not a permutation word")
    return perm


def identity(n):
    return tuple(range(1, n + 1))


@lru_cache(maxsize=None)
def permutations_of(n):
    """S_n in lexicographic order"""
    return tuple(itertools.permutations(range(1, n + 1)))


def permutations_up_to(n):
    return [p for k in range(n + 1) for p in permutations_of(k)]


def degree(perm):
    return len(perm)


def mpr_mul(s, t):
    return shuffle(s, shift(t, len(s)))


def mpr_comul(s):
    return TensorElem(((standardize(left), standardize(right)), 1) for left, right in cuts(s))


def mpr_mul2(s, t):
    """Sum over m-subsets S: the word on S standardizing to s, then the complement word"""
    m, n = len(s), len(t)
    letters = range(1, m + n + 1)
    terms = []
    for chosen in itertools.combinations(letters, m):
        rest = [x for x in letters if x not in chosen]
        terms.append((tuple(chosen[i - 1] for i in s) + tuple(rest[j - 1] for j in t), 1))
    return Elem(terms)


def mpr_comul2(t):
    """Σ t restricted to {1..i} ⊗ st(t restricted to {i+1..n})"""
    terms = []
    for i in range(len(t) + 1):
        low = tuple(x for x in t if x <= i)
        high = tuple(x for x in t if x > i)
        terms.append(((low, standardize(high)), 1))
    return TensorElem(terms)


def inverse(s):
    result = [0] * len(s)
    for position, value in enumerate(s, start=1):
        result[value - 1] = position
    return tuple(result)


def embed_dwha(s):
    return Subst(identity(len(s)), tuple(s))


def compose(s, t):
    """First t, then s, as endomorphisms of Shuffle: the word [t_s1, ..., t_sn]"""
    if len(s) != len(t):
        return Elem.zero()
    return Elem.basis(tuple(t[i - 1] for i in s))


def cocompose(s):
    """Σ over t in S_n of (t⁻¹∘s) ⊗ t"""
    terms = []
    for t in permutations_of(len(s)):
        t_inv = inverse(t)
        terms.append(((tuple(t_inv[x - 1] for x in s), t), 1))
    return TensorElem(terms)


def compose_linear(x, y):
    return bilinear_extend(compose, x, y, kind=Elem)


def cocompose_linear(x):
    return linear_extend(cocompose, x, kind=TensorElem)


def kronecker_inverse(s, t):
    return 1 if tuple(t) == inverse(s) else 0


def orthonormal(s, t):
    return 1 if tuple(s) == tuple(t) else 0


def _enumerate(bound, cap):
    return permutations_up_to(bound)


def mpr_def():
    return HopfDef(name='mpr', degree=degree, enumerate=_enumerate,
                   product=mpr_mul, coproduct=mpr_comul, unit=())


def mpr2_def():
    return HopfDef(name='mpr2', degree=degree, enumerate=_enumerate,
                   product=mpr_mul2, coproduct=mpr_comul2, unit=())


def inverse_map(s):
    return Elem.basis(inverse(s))


def embed_map(s):
    return Elem.basis(embed_dwha(s))


def check_cocompose_duality(n=4):
    """⟨compose(σ, τ), ρ⟩ = ⟨σ ⊗ τ, cocompose(ρ)⟩ under the orthonormal pairing"""
    report = Report(suite="cocomposition duality", subject="mpr", bound=n)
    for m in range(n + 1):
        perms = permutations_of(m)
        for rho in perms:
            delta = cocompose(rho)
            for s in perms:
                for t in perms:
                    if not report.expect("composition dual to cocomposition", [s, t, rho],
                                         compose(s, t).coefficient(rho), delta.coefficient((s, t))):
                        return finish(report)
    return finish(report)


def check_cocompose_restriction(n=3):
    """Cocomposition of MPR is the restriction of cocomposition of substitutions"""
    report = Report(suite="cocomposition restriction", subject="mpr -> dwha", bound=n)
    for perm in permutations_up_to(n):
        lhs = dwha_cocompose(embed_dwha(perm))
        rhs = tensor_map([embed_map, embed_map], cocompose(perm))
        if not report.expect("embedding intertwines cocomposition", [perm], lhs, rhs):
            return finish(report)
    return finish(report)

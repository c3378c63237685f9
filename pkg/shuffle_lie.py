"""
Shuffle, LieHopf and endomorphisms of Shuffle for hopfwords

Shuffle has the shuffle product and the cut coproduct. LieHopf is its graded
dual: concatenation of the monomials U_α and the subword coproduct.
Permutations and words act on Shuffle as endomorphisms; convolution and
coconvolution of those actions recover the structure maps of MPR.
"""
from freemod import Elem, TensorElem
from hopf import HopfDef, Report, finish
from logging_manager import add_log
from mpr import mpr_comul, mpr_mul, permutations_of
from wha import wha_action
from words import compositions_up_to, cuts, shuffle, standardize, subwords_with_complement, \
    weight, words_up_to


class OutOfRangeError(ValueError):
    """Raised when an endomorphism is evaluated beyond its weight bound"""


def _enumerate(bound, cap):
    return compositions_up_to(bound)


def concatenate(a, b):
    return Elem.basis(tuple(a) + tuple(b))


def subword_coproduct(word):
    return TensorElem(((chosen, rest), 1) for chosen, rest in subwords_with_complement(word))


def cut_coproduct(word):
    return TensorElem((pair, 1) for pair in cuts(word))


def liehopf_def():
    return HopfDef(name='liehopf', degree=weight, enumerate=_enumerate,
                   product=concatenate, coproduct=subword_coproduct, unit=())


def shuffle_def():
    return HopfDef(name='shuffle', degree=weight, enumerate=_enumerate,
                   product=shuffle, coproduct=cut_coproduct, unit=())


def kronecker(a, b):
    return 1 if tuple(a) == tuple(b) else 0


def perm_action(perm, word):
    """[a_s1, ..., a_sm] if the lengths agree, else 0"""
    if len(perm) != len(word):
        return Elem.zero()
    return Elem.basis(tuple(word[i - 1] for i in perm))


class GradedEndo:
    """A degree-preserving endomorphism of Shuffle, evaluated on demand up to a weight bound"""

    def __init__(self, fn, bound, name="f"):
        self.fn = fn
        self.bound = bound
        self.name = name
        self.table = {}

    def __call__(self, word):
        word = tuple(word)
        if weight(word) > self.bound:
            raise OutOfRangeError(f"{self.name} is only defined up to weight {self.bound}")
        if word not in self.table:
            self.table[word] = self.fn(word)
        return self.table[word]

    def apply(self, x):
        result = Elem.zero()
        for word, coeff in x.items():
            result = result + coeff * self(word)
        return result

    def __repr__(self):
        return f"GradedEndo({self.name}, bound={self.bound})"


def unit_endo(bound):
    """e∘ε: the empty word goes to itself, everything else to 0"""
    return GradedEndo(lambda w: Elem.basis(()) if not w else Elem.zero(), bound, name="e∘ε")


def action_endo(x, bound):
    """The endomorphism of an Elem of permutations"""
    def evaluate(word):
        result = Elem.zero()
        for perm, coeff in x.items():
            result = result + coeff * perm_action(perm, word)
        return result
    return GradedEndo(evaluate, bound, name=f"action({x})")


def wha_action_endo(a, bound):
    return GradedEndo(lambda w: wha_action(a, w), bound, name=f"wha_action({list(a)})")


def convolution(f, g):
    """α ↦ m_Sh((f⊗g)(μ_Sh(α)))"""
    def evaluate(word):
        result = Elem.zero()
        for (left, right), coeff in cut_coproduct(word).items():
            for u, cu in f(left).items():
                for v, cv in g(right).items():
                    result = result + (coeff * cu * cv) * shuffle(u, v)
        return result
    return GradedEndo(evaluate, min(f.bound, g.bound), name=f"({f.name} * {g.name})")


def coconv_component(perm, m, n):
    """The all-left ⊗ all-right component of μ_Sh∘σ∘m_Sh on tagged letters

    Left letters are 1..m and right letters m+1..m+n, so a letter is tagged by
    which side of m it lies on.
    """
    if m + n != len(perm):
        raise ValueError(f"Component ({m},{n}) does not match a permutation of length {len(perm)}")
    left_word = tuple(range(1, m + 1))
    right_word = tuple(range(m + 1, m + n + 1))
    acc = {}
    for word, coeff in shuffle(left_word, right_word).items():
        for image, c in perm_action(perm, word).items():
            for prefix, suffix in cuts(image):
                if len(prefix) == m and all(x <= m for x in prefix) and all(x > m for x in suffix):
                    key = (standardize(prefix), standardize(suffix))
                    acc[key] = acc.get(key, 0) + coeff * c
    return TensorElem(acc)


def check_convolution_identity(max_total=5, alphabet=3):
    """conv(action σ, action τ) = action(m_MPR(σ⊗τ)) on all words of matching length"""
    report = Report(suite="convolution identity", subject="mpr on shuffle", bound=max_total)
    add_log(f"Checking the convolution identity up to total length {max_total}")
    bound = max_total * alphabet
    test_words = words_up_to(max_total, alphabet)
    for total in range(max_total + 1):
        for m in range(total + 1):
            for s in permutations_of(m):
                for t in permutations_of(total - m):
                    conv = convolution(action_endo(Elem.basis(s), bound),
                                       action_endo(Elem.basis(t), bound))
                    product = action_endo(mpr_mul(s, t), bound)
                    for w in test_words:
                        if len(w) != total:
                            continue
                        if not report.expect("convolution identity", [s, t, w], conv(w), product(w)):
                            return finish(report)
    return finish(report)


def check_coconvolution(max_n=5):
    """Σ over (m, n) of coconv_component(σ, m, n) equals μ_MPR(σ)"""
    report = Report(suite="coconvolution components", subject="mpr", bound=max_n)
    add_log(f"Checking coconvolution components up to length {max_n}")
    for length in range(max_n + 1):
        for perm in permutations_of(length):
            total = TensorElem.zero()
            for m in range(length + 1):
                total = total + coconv_component(perm, m, length - m)
            if not report.expect("components sum to the coproduct", [perm], total, mpr_comul(perm)):
                return finish(report)
    return finish(report)


"""
The incisive cut coalgebra for hopfwords

Words with the ordinary cuts plus the cuts through a single letter. ICC has
no product; its graded dual carries the ribbon multiplication.
"""
from freemod import Elem, TensorElem
from hopf import HopfDef, Report, check_hopf_morphism, finish, pair, pair_tensor
from mpr import mpr_def, permutations_of
from nsq import comp_of_desc, desc_of_perm, f_basis, kronecker, pi_map, qsymm_def, ribbon_product
from words import compositions, compositions_up_to, cuts, weight


def icc_comul(word):
    """Ordinary cuts, then every split a = b + c of a letter with b, c > 0"""
    word = tuple(word)
    terms = [(pair, 1) for pair in cuts(word)]
    for j, letter in enumerate(word):
        for b in range(1, letter):
            terms.append(((word[:j] + (b,), (letter - b,) + word[j + 1:]), 1))
    return TensorElem(terms)


def _enumerate(bound, cap):
    return compositions_up_to(bound)


def icc_def():
    return HopfDef(name='icc', degree=weight, enumerate=_enumerate, coproduct=icc_comul, unit=())


def mpr_to_icc(perm):
    return Elem.basis(comp_of_desc(desc_of_perm(perm)))


def icc_dual_mul(alpha, beta):
    """R′_α R′_β = R′_αβ + R′_α▹β"""
    return ribbon_product(alpha, beta)


def icc_to_qsymm(word):
    """α ↦ F_α in the monomial basis"""
    return f_basis(word)


def check_icc_duality(bound=5):
    """⟨R′_α R′_β, γ⟩ = ⟨α ⊗ β, μ(γ)⟩ under the Kronecker pairing"""
    report = Report(suite="icc duality", subject="icc", bound=bound)
    for n in range(bound + 1):
        for gamma in compositions(n):
            delta = icc_comul(gamma)
            for k in range(n + 1):
                for alpha in compositions(k):
                    for beta in compositions(n - k):
                        lhs = pair(kronecker, icc_dual_mul(alpha, beta), Elem.basis(gamma))
                        rhs = pair_tensor(kronecker, TensorElem.basis((alpha, beta)), delta)
                        if not report.expect("product dual to incisive cuts", [alpha, beta, gamma], lhs, rhs):
                            return finish(report)
    return finish(report)


def check_term_count(bound=6):
    """μ(α) has wt(α) + 1 terms"""
    report = Report(suite="incisive cut term count", subject="icc", bound=bound)
    for alpha in compositions_up_to(bound):
        if not report.expect("terms = wt + 1", [alpha], len(icc_comul(alpha)), weight(alpha) + 1):
            return finish(report)
    return finish(report)


def check_mpr_to_icc(bound=5):
    return check_hopf_morphism(mpr_to_icc, mpr_def(), icc_def(), bound, halves="coalgebra",
                               name="mpr -> icc")


def check_icc_to_qsymm(bound=5):
    return check_hopf_morphism(icc_to_qsymm, icc_def(), qsymm_def(), bound, halves="coalgebra",
                               name="icc -> qsymm")


def check_projection_factors(bound=5):
    """π equals icc_to_qsymm after mpr_to_icc"""
    report = Report(suite="projection factorisation", subject="mpr -> icc -> qsymm", bound=bound)
    for n in range(bound + 1):
        for perm in permutations_of(n):
            (alpha,) = mpr_to_icc(perm).keys()
            if not report.expect("π = F∘comp∘desc", [perm], icc_to_qsymm(alpha), pi_map(perm)):
                return finish(report)
    return finish(report)

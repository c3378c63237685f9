"""
Descent combinatorics for hopfwords

Ascents and descents (plain and global), the lexicographically smallest and
largest permutations of a descent class, the left weak order and its Hasse
graph, the retraction ψ of the embedding of NSymm and the coalgebra sections
of the projection onto QSymm.
"""
import networkx as nx

import config
from freemod import Elem
from hopf import Report, check_hopf_morphism, finish
from logging_manager import add_log
from mpr import mpr2_def, mpr_def, mpr_mul2, permutations_of
from nsq import DescentSet, NsymmElem, QsymmElem, comp_of_desc, desc_of_comp, desc_of_perm, descent_class, \
    descent_sets, duality_pairing, embed_i, nsymm_def, qsymm_f_def
from words import compositions, compositions_up_to, cuts, format_word, shift, standardize


class LengthMismatchError(ValueError):
    """Raised when permutations or descent sets of different sizes are compared"""


def ascents(perm):
    return {p for p in range(1, len(perm)) if perm[p - 1] < perm[p]}


def descents(perm):
    return {p for p in range(1, len(perm)) if perm[p - 1] > perm[p]}


def global_ascents(perm):
    """Ascents p with every letter up to p below every letter after p"""
    return {p for p in range(1, len(perm)) if max(perm[:p]) < min(perm[p:])}


def global_descents(perm):
    return {p for p in range(1, len(perm)) if min(perm[:p]) > max(perm[p:])}


def lsd(D):
    """Lexicographically smallest permutation with descent set D

    Positions are joined into blocks across descents; blocks get consecutive
    values smallest first and each block is written descending.
    """
    result = []
    start = 1
    for position in range(1, D.m + 1):
        if position == D.m or position not in D.elements:
            result.extend(range(position, start - 1, -1))
            start = position + 1
    return tuple(result)


def complement(perm):
    """[m+1-a1, ..., m+1-am]"""
    m = len(perm)
    return tuple(m + 1 - a for a in perm)


def lld(D):
    """Lexicographically largest permutation with descent set D"""
    return complement(lsd(D.complement()))


def is_lsd(perm):
    return global_ascents(perm) == ascents(perm)


def is_closed(perm):
    return global_descents(perm) == descents(perm)


def is_lld(perm):
    return is_closed(perm)


def lex_min_oracle(D):
    return min(descent_class(D))


def lex_max_oracle(D):
    return max(descent_class(D))


# Left weak order

def inversions(perm):
    """Position pairs (i, j), i < j, with perm[i] > perm[j]"""
    n = len(perm)
    return frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if perm[i - 1] > perm[j - 1])


def lwo_leq(sigma, tau):
    if len(sigma) != len(tau):
        raise LengthMismatchError(f"{format_word(sigma)} and {format_word(tau)} have different lengths")
    return inversions(sigma) <= inversions(tau)


def _switch_values(perm, k):
    return tuple(k + 1 if a == k else k if a == k + 1 else a for a in perm)


def lower_covers(perm):
    """Switch values k+1 and k where k+1 stands to the left of k"""
    position = {a: i for i, a in enumerate(perm)}
    return [_switch_values(perm, k) for k in range(1, len(perm)) if position[k + 1] < position[k]]


def upper_covers(perm):
    position = {a: i for i, a in enumerate(perm)}
    return [_switch_values(perm, k) for k in range(1, len(perm)) if position[k] < position[k + 1]]


covers = lower_covers


def hasse(n, highlight=None):
    """Hasse graph of the left weak order on S_n, edges pointing down"""
    if n > config.HASSE_MAX_N:
        raise ValueError(f"Hasse graphs are capped at n = {config.HASSE_MAX_N}, got {n}")
    if highlight is not None and highlight.m != n:
        raise LengthMismatchError(f"Descent set {highlight.render()} does not live in S_{n}")
    graph = nx.DiGraph()
    for perm in permutations_of(n):
        graph.add_node(perm, layer=len(inversions(perm)), word=format_word(perm),
                       highlight=highlight is not None and desc_of_perm(perm) == highlight)
    for perm in permutations_of(n):
        for lower in lower_covers(perm):
            graph.add_edge(perm, lower)
    return graph


def hasse_to_gml(graph):
    """GML text with one node per permutation word"""
    labelled = nx.DiGraph()
    for perm, data in graph.nodes(data=True):
        labelled.add_node(data['word'], layer=data['layer'], highlight=int(data['highlight']))
    for upper, lower in graph.edges():
        labelled.add_edge(graph.nodes[upper]['word'], graph.nodes[lower]['word'])
    return "\n".join(nx.generate_gml(labelled))


def descent_class_subgraph(graph, D):
    return graph.subgraph(descent_class(D))


# Checks

def check_descent_class_theorem(n=6):
    """Each descent class is connected with weak order minimum lsd and maximum lld"""
    report = Report(suite="descent class theorem", subject="left weak order", bound=n)
    add_log(f"Checking the descent class theorem up to n = {n}")
    for m in range(1, n + 1):
        graph = hasse(m)
        for D in descent_sets(m):
            members = descent_class(D)
            sub = descent_class_subgraph(graph, D)
            if not report.expect("descent class is connected", [D], nx.is_weakly_connected(sub), True):
                return finish(report)
            bottom, top = lsd(D), lld(D)
            smallest = all(lwo_leq(bottom, perm) for perm in members)
            largest = all(lwo_leq(perm, top) for perm in members)
            if not report.expect("lsd is the weak order minimum", [D, bottom], smallest, True):
                return finish(report)
            if not report.expect("lld is the weak order maximum", [D, top], largest, True):
                return finish(report)
            minimal = [perm for perm in members if sub.out_degree(perm) == 0]
            if not report.expect("unique minimal element", [D], minimal, [bottom]):
                return finish(report)
    return finish(report)


def check_global_characterisation(n=6):
    """lex-min in its class iff gasc = asc; lex-max iff gdesc = desc"""
    report = Report(suite="global ascent characterisation", subject="mpr", bound=n)
    for m in range(n + 1):
        for perm in permutations_of(m):
            D = desc_of_perm(perm)
            if not report.expect("lsd iff gasc = asc", [perm], perm == lex_min_oracle(D), is_lsd(perm)):
                return finish(report)
            if not report.expect("lld iff closed", [perm], perm == lex_max_oracle(D), is_closed(perm)):
                return finish(report)
    return finish(report)


def check_lsd_oracle(n=7):
    """Greedy lsd and lld against the brute-force lexicographic extremes"""
    report = Report(suite="lsd oracle", subject="descent classes", bound=n)
    for m in range(n + 1):
        for D in descent_sets(m):
            if not report.expect("greedy lsd = lex minimum", [D], lsd(D), lex_min_oracle(D)):
                return finish(report)
            if not report.expect("lld = lex maximum", [D], lld(D), lex_max_oracle(D)):
                return finish(report)
    return finish(report)


def check_lex_refines_weak_order(n=5):
    report = Report(suite="lex refines weak order", subject="left weak order", bound=n)
    for m in range(n + 1):
        perms = permutations_of(m)
        for sigma in perms:
            for tau in perms:
                if sigma != tau and lwo_leq(tau, sigma):
                    if not report.expect("σ >lwo τ implies σ >lex τ", [sigma, tau], sigma > tau, True):
                        return finish(report)
    return finish(report)


def check_nonlsd_ideal(bound=5):
    """Products m′(ρ⊗σ) with a non-lsd factor have no lsd terms"""
    report = Report(suite="non-lsd ideal", subject="mpr2", bound=bound)
    perms = [p for m in range(bound + 1) for p in permutations_of(m)]
    for rho in perms:
        for sigma in perms:
            if len(rho) + len(sigma) > bound or (is_lsd(rho) and is_lsd(sigma)):
                continue
            lsd_terms = [p for p in mpr_mul2(rho, sigma) if is_lsd(p)]
            if not report.expect("no lsd term", [rho, sigma], lsd_terms, []):
                return finish(report)
    return finish(report)


def check_cut_closure(n=6, kind="lsd"):
    """Standardized halves of every cut of an lsd (or lld) permutation are again lsd (lld)"""
    test = {'lsd': is_lsd, 'lld': is_lld}[kind]
    report = Report(suite=f"{kind} cut closure", subject="mpr", bound=n)
    for m in range(n + 1):
        for perm in permutations_of(m):
            if not test(perm):
                continue
            for left, right in cuts(perm):
                if not report.expect(f"cut halves are {kind}", [perm, left, right],
                                     (test(standardize(left)), test(standardize(right))), (True, True)):
                    return finish(report)
    return finish(report)


def psi_witnesses(sigma, tau):
    """The two lsd summands of m′(σ⊗τ) for lsd σ and τ"""
    m = len(sigma)
    top = sigma.index(m)
    r = sigma[-1]
    s = tau[0]
    rho1 = tuple(sigma) + shift(tau, m)
    rho2 = tuple(sigma[:top]) + tuple(range(m + s, r - 1, -1)) + shift(tau[s:], m)
    return rho1, rho2


def check_psi_witnesses(bound=4):
    report = Report(suite="ψ witnesses", subject="mpr2", bound=bound)
    for total in range(2, bound + 1):
        for m in range(1, total):
            n = total - m
            for D in descent_sets(m):
                for E in descent_sets(n):
                    sigma, tau = lsd(D), lsd(E)
                    rho1, rho2 = psi_witnesses(sigma, tau)
                    shifted = frozenset(m + e for e in E.elements)
                    d1 = DescentSet(D.elements | shifted, total)
                    d2 = DescentSet(D.elements | shifted | {m}, total)
                    product = mpr_mul2(sigma, tau)
                    if not report.expect("ρ1 = lsd(D1)", [sigma, tau], rho1, lsd(d1)):
                        return finish(report)
                    if not report.expect("ρ2 = lsd(D2)", [sigma, tau], rho2, lsd(d2)):
                        return finish(report)
                    if not report.expect("ρ1, ρ2 occur in m′(σ⊗τ)", [sigma, tau],
                                         (product.coefficient(rho1), product.coefficient(rho2)), (1, 1)):
                        return finish(report)
    return finish(report)


# The retraction ψ and the sections of π

def psi_retract(perm):
    """R of the composition of the descent set if perm is lsd, else 0"""
    if not is_lsd(perm):
        return NsymmElem('R', Elem.zero())
    return NsymmElem.basis_elem('R', comp_of_desc(desc_of_perm(perm)))


def psi_map(perm):
    """ψ in the S basis, for morphism checks against NSymm"""
    return psi_retract(perm).to_basis('S').elem


def psi_linear(x):
    total = NsymmElem('R', Elem.zero())
    for perm, coeff in x.items():
        total = total + coeff * psi_retract(perm)
    return total


def section_lsd(alpha):
    return lsd(desc_of_comp(alpha))


def section_lld(alpha):
    return lld(desc_of_comp(alpha))


def section_lsd_map(alpha):
    return Elem.basis(section_lsd(alpha))


def section_lld_map(alpha):
    return Elem.basis(section_lld(alpha))


def complement_map(perm):
    return Elem.basis(complement(perm))


def psi_dual_section(alpha):
    """F_α ↦ Σ ⟨ψ(σ), F_α⟩ σ under the orthonormal pairing of permutations"""
    target = QsymmElem.basis_elem('F', alpha)
    n = sum(alpha)
    return Elem((perm, duality_pairing(psi_retract(perm), target)) for perm in permutations_of(n))


def check_psi_retraction(bound=5):
    """ψ∘i = id on NSymm"""
    report = Report(suite="ψ retraction", subject="nsymm -> mpr2 -> nsymm", bound=bound)
    for alpha in compositions_up_to(bound):
        x = NsymmElem.basis_elem('S', alpha)
        if not report.expect("ψ∘i = id", [alpha], psi_linear(embed_i(x)).to_basis('S').elem, x.elem):
            return finish(report)
    return finish(report)


def check_psi_multiplicative(bound=4):
    return check_hopf_morphism(psi_map, mpr2_def(), nsymm_def(), bound, halves="algebra", name="ψ")


def check_sections(bound=5, kind="lsd"):
    """π∘section = id and the section is a coalgebra map from QSymm (F basis)"""
    section = {'lsd': section_lsd, 'lld': section_lld}[kind]
    report = Report(suite=f"{kind} section", subject="qsymm -> mpr", bound=bound)
    for alpha in compositions_up_to(bound):
        if not report.expect("π∘section = id", [alpha], comp_of_desc(desc_of_perm(section(alpha))), alpha):
            return finish(report)
    maps = {'lsd': section_lsd_map, 'lld': section_lld_map}
    report.merge(check_hopf_morphism(maps[kind], qsymm_f_def(), mpr_def(), bound, halves="coalgebra",
                                     name=f"{kind} section"))
    return finish(report)


def first_section_difference(bound=5):
    """The first composition on which the lsd and lld sections differ, or None"""
    for alpha in compositions_up_to(bound):
        if section_lsd(alpha) != section_lld(alpha):
            return alpha
    return None


def check_psi_dual_section(bound=4):
    """The section dual to ψ sends F_α to the lsd permutation, lsd permutations being involutions"""
    report = Report(suite="ψ-dual section", subject="qsymm -> mpr", bound=bound)
    for n in range(bound + 1):
        for alpha in compositions(n):
            if not report.expect("ψ-dual section = lsd section", [alpha], psi_dual_section(alpha),
                                 section_lsd_map(alpha)):
                return finish(report)
    return finish(report)


def check_complement_automorphism(bound=5):
    return check_hopf_morphism(complement_map, mpr_def(), mpr_def(), bound, halves="coalgebra",
                               name="complement")

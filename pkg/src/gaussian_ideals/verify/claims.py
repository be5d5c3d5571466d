"""Statements of every identity the verifiers check, written as the formula being tested."""

from __future__ import annotations

GAUSSIAN_CONTAINMENT = "c(fg) ⊆ c(f)c(g)"
DEDEKIND_MERTENS = "c(fg)·c(g)^m = c(f)·c(g)^(m+1)"
DEDEKIND_MERTENS_DECAYED = "c(fg)·[c(f)c(g)]^m = c(f)c(g)·[c(f)c(g)]^m"
DEDEKIND_MERTENS_LOWERED = "c(fg)·c(g)^(m-1) = c(f)·c(g)^m fails (exponent m is sharp)"

REDUCTION_AT_M = "[c(f)c(g)]^(m+1) = c(fg)·[c(f)c(g)]^m"
REDUCTION_NOT_BEFORE_M = "[c(f)c(g)]^m ≠ c(fg)·[c(f)c(g)]^(m-1)"
REDUCTION_NUMBER = "r_J(I) = m for J = c(fg), I = c(f)c(g)"
REDUCTION_BOUND = "r_J(I) ≤ min(deg f, deg g)"
THREE_REDUCTION_NUMBER = "r_J(I) = m+n for J = c(fgh), I = c(f)c(g)c(h)"

PRIMARY_DECOMPOSITION2 = "c(fg) = c(f) ∩ c(g) ∩ L(f,g), L(f,g) = c(fg) + c(f)^(n+1) + c(g)^(m+1)"
ABSORPTION2 = "c(fg) + c(f) ∩ c(g)^(m+1) = c(fg)"
L2_CODIMENSION = "codim L(f,g) = m+n+2"
PRIMARY_DECOMPOSITION3 = (
    "c(fgh) = c(f) ∩ c(g) ∩ c(h) ∩ L(f,g) ∩ L(f,h) ∩ L(g,h) ∩ L(f,g,h)"
)
PAIRWISE_DECOMPOSITION = "c(ab) = c(a) ∩ c(b) ∩ L(a,b) for the pair {pair}"
ABSORPTION3 = (
    "c(fgh) + c(h) ∩ c(fg)^(p+1) + c(g) ∩ c(fh)^(n+1) + c(f) ∩ c(gh)^(m+1) = c(fgh)"
)

HU_PRODUCT = "(X·φ) = c(fg)"
HU_POWER = "(X)^(n+1) = c(f)^(n+1)"
HU_MINORS = "I_(m+1)(φ) = c(g)^(m+1)"

TORIC_EQUALS_MINORS = "ker(Q_ij ↦ x_i y_j) = I_2 of the generic (m+1)×(n+1) matrix"
TORIC_HEIGHT = "height ker(Q_ij ↦ x_i y_j) = mn"
TORIC_BINOMIAL = "the toric kernel has a binomial Groebner basis"
NOETHER_INDEPENDENT = "h_q = Σ_(i+j=q) x_i y_j are algebraically independent"
NOETHER_FINITE = "k[Q]/(toric kernel + ℓ_q) has finitely many standard monomials"
NOETHER_TOP_DEGREE = "top degree of the Artinian reduction = m"

ANALYTIC_SPREAD = "ℓ(I) = number of linear forms ℓ_q"
FIBER_REDUCTION = "reduction number read from the Artinian Hilbert function = {expected}"
HILBERT_TOTAL = "Σ HF(Artinian reduction) = multiplicity of the fiber"
CROSS_ROUTE = "fiber route and Groebner route give the same reduction number"

NORMALITY = "IC(I^q) = I^q for q = 1..{up_to}"
JOIN_NORMALITY = "IC((I*J)^q) = (I*J)^q for q = 1..{up_to}"
NON_NORMAL_CONTROL = "xy ∈ IC((x^2, y^2)) \\ (x^2, y^2), so (x^2, y^2) is not normal"

STRUCT_ASSOCIATIVE = "the structure constants define an associative product"
STRUCT_CONSISTENT = "struct_content agrees with the content of the matching polynomial"
STRUCT_REDUCTION = "c(uv) is a reduction of c(u)c(v) with r ≤ {bound}"
STRUCT_GAUSS_LEMMA = "u, v with unit constant coefficient give c(uv) = (1)"

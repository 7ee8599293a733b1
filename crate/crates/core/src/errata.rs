//! Ledger entries for printed formulas that the computations correct.
//!
//! Each suite adds the entries it settles; nothing here is asserted on its
//! own.

use crate::report::TypoEntry;

fn entry(location: &str, printed: &str, resolution: &str) -> TypoEntry {
    TypoEntry {
        location: location.into(),
        printed: printed.into(),
        resolution: resolution.into(),
    }
}

pub fn bilinear_form_shape() -> TypoEntry {
    entry(
        "bilinear form J",
        "J rendered as the identity matrix",
        "J is the anti-diagonal matrix of ones: the G2 Lie algebra display satisfies XJ + JX^t = 0 and <v_rho,v_rho> = 2*rho only for the anti-diagonal J",
    )
}

pub fn norm_form() -> TypoEntry {
    entry(
        "torus element, definition of N",
        "N := a^2 - b*rho^2",
        "N = a^2 - b^2*rho: only this makes the 8x8 torus matrix have determinant 1",
    )
}

pub fn case_one_k_sign() -> TypoEntry {
    entry(
        "Iwasawa factor k' for |b*rho| <= |a|",
        "k' = x_{-alpha1}(b*rho/a) (entries (2,1),(4,3),(5,3) = b*rho/a; (6,4),(6,5),(8,7) = -b*rho/a)",
        "k' = x_{-alpha1}(-b*rho/a): every entry linear in b*rho/a changes sign; u' and t' are as printed",
    )
}

pub fn case_two_blank() -> TypoEntry {
    entry(
        "Iwasawa factors u', k' for |b*rho| > |a|",
        "left blank",
        "u' = x_{alpha1}(-a/(b*rho)), k' = n_{alpha1}(1) * x_{alpha1}(-a/(b*rho)); the printed t' is confirmed",
    )
}

pub fn delta_b_sign() -> TypoEntry {
    entry(
        "split-case value of delta_B^(-1/2)(t)",
        "q^(-m1-m2)",
        "|N|^(-1) = q^(m1+m2); with this sign the integrand weight assembles to x^max(m1,m2)",
    )
}

pub fn traceless_dimension() -> TypoEntry {
    entry(
        "space of the representation r",
        "3x4 traceless matrices",
        "3x3 traceless matrices (dimension 8)",
    )
}

pub fn duplicated_eigenspace() -> TypoEntry {
    entry(
        "Fr-eigenspace decomposition",
        "the -1 eigenspace sentence repeats '5 dimensional +1 eigenspace'",
        "-1 eigenspace has dimension 3 with eigenvalues mu, 1, mu^-1",
    )
}

pub fn satake_group() -> TypoEntry {
    entry(
        "Satake class of pi",
        "conjugacy class of GL_2(C)",
        "conjugacy class of GL_3(C) (the class acts on 3x3 matrices)",
    )
}

pub fn capital_m() -> TypoEntry {
    entry(
        "non-split sum identity, right-hand side",
        "T^M",
        "T^m (the summation index)",
    )
}

pub fn zeta_triple(printed_fails: bool, reconstructed_matches: bool) -> TypoEntry {
    let resolution = match (printed_fails, reconstructed_matches) {
        (true, true) => "zeta(9s-3): the triple {3s, 6s-2, 9s-3} matches exactly and the printed one does not",
        (false, _) => "printed triple matches; no correction",
        (true, false) => "neither triple matches",
    };
    entry(
        "normalizing zeta factors of the unramified integral",
        "zeta(3s) zeta(6s-2) zeta(3s-9)",
        resolution,
    )
}

pub fn inner_integral_range() -> TypoEntry {
    entry(
        "SL2 inner integral closed form",
        "(1-q^-1 x)(1-x^(v(c)+1))/(1-x) for all c",
        "valid only for v(c) >= -1; for v(c) <= -2 the integral is 0 while the closed form is not",
    )
}

//! The two Lie algebra displays, transcribed entry by entry.

use crate::algebra::{rat, LaurentPoly, RingMatrix};

pub const G2_PARAMS: [&str; 14] = [
    "T1", "T2", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l",
];

pub const SU21_PARAMS: [&str; 8] = ["T1", "a", "d", "e", "f", "h", "k", "l"];

const G2_TABLE: [[&str; 8]; 8] = [
    ["T1", "a", "c", "d", "d", "e", "f", "0"],
    ["g", "T2-T1", "b", "-c", "-c", "d", "0", "-f"],
    ["h", "l", "2*T1-T2", "a", "a", "0", "-d", "-e"],
    ["i", "-h", "g", "0", "0", "-a", "c", "-d"],
    ["i", "-h", "g", "0", "0", "-a", "c", "-d"],
    ["j", "i", "0", "-g", "-g", "T2-2*T1", "-b", "-c"],
    ["k", "0", "-i", "h", "h", "-l", "T1-T2", "-a"],
    ["0", "-k", "-j", "-i", "-i", "-h", "-g", "-T1"],
];

const SU21_TABLE: [[&str; 8]; 8] = [
    ["T1", "a", "-rho*e", "d", "d", "e", "f", "0"],
    ["rho*a", "T1", "-rho*d", "rho*e", "rho*e", "d", "0", "-f"],
    ["h", "l", "0", "a", "a", "0", "-d", "-e"],
    ["-rho*l", "-h", "rho*a", "0", "0", "-a", "-rho*e", "-d"],
    ["-rho*l", "-h", "rho*a", "0", "0", "-a", "-rho*e", "-d"],
    ["-rho*h", "-rho*l", "0", "-rho*a", "-rho*a", "0", "rho*d", "rho*e"],
    ["k", "0", "rho*l", "h", "h", "-l", "-T1", "-a"],
    ["0", "-k", "rho*h", "rho*l", "rho*l", "-h", "-rho*a", "-T1"],
];

/// Substitution carrying the G2 display onto the SU(2,1) display.
pub const SU21_SUBSTITUTION: [(&str, &str); 6] = [
    ("T2", "2*T1"),
    ("b", "-rho*d"),
    ("c", "-rho*e"),
    ("g", "rho*a"),
    ("i", "-rho*l"),
    ("j", "-rho*h"),
];

/// Parses a signed sum of products of integers and variable names.
pub(crate) fn parse_entry(s: &str) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut term = String::new();
    let mut sign = 1;
    let flush = |term: &str, sign: i64, out: &mut LaurentPoly| {
        if term.is_empty() {
            return;
        }
        let mut coeff = sign;
        let mut powers = Vec::new();
        for factor in term.split('*') {
            match factor.parse::<i64>() {
                Ok(n) => coeff *= n,
                Err(_) => powers.push((factor, 1)),
            }
        }
        *out = &*out + LaurentPoly::monomial(rat(coeff), &powers);
    };
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '+' | '-' => {
                flush(&term, sign, &mut out);
                term.clear();
                sign = if ch == '-' { -1 } else { 1 };
            }
            _ => term.push(ch),
        }
    }
    flush(&term, sign, &mut out);
    out
}

fn table_matrix(table: &[[&str; 8]; 8]) -> RingMatrix<LaurentPoly> {
    RingMatrix::from_fn(8, 8, |i, j| parse_entry(table[i][j]))
}

/// The general element of the G2 display in the 14 parameter symbols.
pub fn g2_symbolic() -> RingMatrix<LaurentPoly> {
    table_matrix(&G2_TABLE)
}

/// The general element of the SU(2,1) display in its 8 parameter symbols and `rho`.
pub fn su21_symbolic() -> RingMatrix<LaurentPoly> {
    table_matrix(&SU21_TABLE)
}

/// Sets every parameter in `params` to zero except `name`, which becomes 1.
pub fn direction(
    m: &RingMatrix<LaurentPoly>,
    params: &[&str],
    name: &str,
) -> RingMatrix<LaurentPoly> {
    let subs: Vec<(&str, LaurentPoly)> = params
        .iter()
        .map(|p| (*p, LaurentPoly::int(i64::from(*p == name))))
        .collect();
    m.substitute(&subs).expect("polynomial substitution")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::{c, v};

    #[test]
    fn parses_entries() {
        assert_eq!(parse_entry("0"), c(0));
        assert_eq!(parse_entry("T2-2*T1"), v("T2") - c(2) * v("T1"));
        assert_eq!(parse_entry("-rho*e"), -(v("rho") * v("e")));
    }

    #[test]
    fn rows_four_and_five_agree() {
        let g = g2_symbolic();
        assert_eq!(g.row(3), g.row(4));
        let s = su21_symbolic();
        assert_eq!(s.row(3), s.row(4));
    }

    #[test]
    fn direction_extracts_single_parameter() {
        let e = direction(&g2_symbolic(), &G2_PARAMS, "a");
        let ones: Vec<(usize, usize)> = (0..8)
            .flat_map(|i| (0..8).map(move |j| (i, j)))
            .filter(|&(i, j)| !e.get(i, j).is_zero())
            .collect();
        assert_eq!(ones, vec![(0, 1), (2, 3), (2, 4), (3, 5), (4, 5), (6, 7)]);
    }
}

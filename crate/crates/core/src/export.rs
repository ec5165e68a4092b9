//! Export of power and monomial ideals as ready-to-paste scripts for the
//! Macaulay2 and Singular computer algebra systems. Output is deterministic:
//! variables are `x1, ..., xn` over the rationals and generators appear in
//! the ideal's own order.

use std::fmt::Write;

use crate::graph::VertexSubset;
use crate::ideal::{MonomialIdeal, PowerIdeal};
use crate::parking::ExponentVector;

/// Target computer algebra system.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CasDialect {
    Macaulay2,
    Singular,
}

fn linear_form(support: VertexSubset) -> String {
    let terms: Vec<String> = support.iter().map(|i| format!("x{i}")).collect();
    if terms.len() == 1 {
        terms.into_iter().next().unwrap()
    } else {
        format!("({})", terms.join("+"))
    }
}

fn power_term(support: VertexSubset, exponent: u32) -> String {
    let base = linear_form(support);
    if exponent == 1 {
        base
    } else {
        format!("{base}^{exponent}")
    }
}

/// Renders an exponent vector as `x1^a1*x2^a2*…`, dropping unit factors
/// (the zero vector renders as `1`). Valid in both supported dialects.
pub fn monomial_term(exponents: &ExponentVector) -> String {
    let mut factors = Vec::new();
    for i in 1..=exponents.len() {
        match exponents.exponent(i) {
            0 => {}
            1 => factors.push(format!("x{i}")),
            e => factors.push(format!("x{i}^{e}")),
        }
    }
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

fn script(dialect: CasDialect, n: usize, terms: &[String]) -> String {
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let vars = vars.join(",");
    let mut out = String::new();
    match dialect {
        CasDialect::Macaulay2 => {
            writeln!(out, "R = QQ[{vars}];").unwrap();
            writeln!(out, "I = ideal(").unwrap();
            for (pos, term) in terms.iter().enumerate() {
                let comma = if pos + 1 < terms.len() { "," } else { "" };
                writeln!(out, "  {term}{comma}").unwrap();
            }
            writeln!(out, ");").unwrap();
        }
        CasDialect::Singular => {
            writeln!(out, "ring R = 0, ({vars}), dp;").unwrap();
            writeln!(out, "ideal I =").unwrap();
            for (pos, term) in terms.iter().enumerate() {
                let tail = if pos + 1 < terms.len() { "," } else { ";" };
                writeln!(out, "  {term}{tail}").unwrap();
            }
        }
    }
    out
}

/// Script defining the power ideal: one power of a linear form per subset.
pub fn power_ideal_script(ideal: &PowerIdeal, dialect: CasDialect) -> String {
    let terms: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| power_term(g.support, g.exponent))
        .collect();
    script(dialect, ideal.n(), &terms)
}

/// Script defining the monomial ideal: one monomial per generator.
pub fn monomial_ideal_script(ideal: &MonomialIdeal, dialect: CasDialect) -> String {
    let terms: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| monomial_term(&g.exponents))
        .collect();
    script(dialect, ideal.n(), &terms)
}

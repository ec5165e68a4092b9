//! Exact integer linear algebra for the graded pieces of a quotient by a
//! power ideal, and the Hilbert series computed from ranks.
//!
//! The default rank algorithm is fraction-free (Bareiss) elimination over
//! arbitrary-precision integers, so Hilbert coefficients never depend on
//! floating-point pivots. A single-prime modular elimination is provided as
//! an independent fast path; the two are cross-checked in the test suite.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::ideal::PowerIdeal;
use crate::parking::ExponentVector;
use crate::series::HilbertSeries;

/// Dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>, // row-major
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &value) in row.iter().enumerate() {
                m.set(r, c, BigInt::from(value));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.data[r * self.cols + c] = value;
    }
}

/// Rank over the rationals, by Bareiss fraction-free elimination. Entries
/// stay integral throughout (every intermediate value is a minor of the
/// original matrix), so the result is exact.
pub fn exact_rank(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| {
            let row: Vec<BigInt> = (0..m.cols).map(|c| m.get(r, c).clone()).collect();
            // Dividing a row by its content leaves the rank unchanged and
            // keeps the minors small.
            let content = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if content > BigInt::from(1) {
                row.into_iter().map(|x| x / &content).collect()
            } else {
                row
            }
        })
        .collect();
    let rows = a.len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..m.cols {
        if rank == rows {
            break;
        }
        // Smallest nonzero pivot keeps the fraction-free updates cheap.
        let mut pivot_row: Option<usize> = None;
        for r in rank..rows {
            if !a[r][col].is_zero() && pivot_row.is_none_or(|p| a[r][col].abs() < a[p][col].abs()) {
                pivot_row = Some(r);
            }
        }
        let Some(p) = pivot_row else { continue };
        a.swap(rank, p);
        let (upper, lower) = a.split_at_mut(rank + 1);
        let pivot_row = &upper[rank];
        for row in lower.iter_mut() {
            let lead = std::mem::replace(&mut row[col], BigInt::zero());
            for j in col + 1..m.cols {
                let num = &pivot_row[col] * &row[j] - &lead * &pivot_row[j];
                row[j] = num / &prev;
            }
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// A Mersenne prime that keeps `u64` products inside `u128`.
pub const DEFAULT_MODULUS: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Rank of the matrix reduced modulo a prime. This is a lower bound for the
/// rational rank, with equality unless the prime divides the relevant minor.
pub fn modular_rank(m: &IntMatrix, modulus: u64) -> usize {
    assert!(modulus > 1, "modulus must be a prime greater than 1");
    let p = BigInt::from(modulus);
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| {
            (0..m.cols)
                .map(|c| m.get(r, c).mod_floor(&p).to_u64().unwrap())
                .collect()
        })
        .collect();
    let rows = m.rows;
    let mut rank = 0;
    for col in 0..m.cols {
        if rank == rows {
            break;
        }
        let Some(p_row) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p_row);
        let inv = pow_mod(a[rank][col], modulus - 2, modulus);
        let (upper, lower) = a.split_at_mut(rank + 1);
        let pivot_row = &upper[rank];
        for row in lower.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = mul_mod(row[col], inv, modulus);
            row[col] = 0;
            for j in col + 1..m.cols {
                let sub = mul_mod(factor, pivot_row[j], modulus);
                row[j] = (row[j] + modulus - sub) % modulus;
            }
        }
        rank += 1;
    }
    rank
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// All exponent vectors in `n` variables of total degree `d`, in increasing
/// lexicographic order. There are `C(n + d - 1, d)` of them.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<ExponentVector> {
    fn rec(
        prefix: &mut Vec<u32>,
        vars_left: usize,
        degree_left: u32,
        out: &mut Vec<ExponentVector>,
    ) {
        if vars_left == 1 {
            prefix.push(degree_left);
            out.push(ExponentVector::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in 0..=degree_left {
            prefix.push(a);
            rec(prefix, vars_left - 1, degree_left - a, out);
            prefix.pop();
        }
    }
    assert!(n >= 1);
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), n, d, &mut out);
    out
}

/// The degree-`d` piece of a power ideal, expressed in the monomial basis:
/// one row per (generator, monomial multiplier) pair, one column per
/// monomial of degree `d`. The quotient's coefficient of `t^d` equals the
/// number of columns minus the rank.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: u32,
    pub monomials: Vec<ExponentVector>,
    pub matrix: IntMatrix,
}

pub fn graded_piece(ideal: &PowerIdeal, degree: u32) -> GradedPiece {
    let n = ideal.n();
    let monomials = monomials_of_degree(n, degree);
    let index: std::collections::HashMap<&ExponentVector, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();

    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for gen in ideal.generators() {
        if gen.exponent > degree {
            continue;
        }
        let support: Vec<usize> = gen.support.iter().collect();
        // Expand (sum of support variables)^exponent once per generator.
        let mut terms: Vec<(Vec<u32>, BigInt)> = Vec::new();
        let mut parts = vec![0u32; support.len()];
        fn compositions(
            e: u32,
            idx: usize,
            parts: &mut Vec<u32>,
            out: &mut Vec<(Vec<u32>, BigInt)>,
        ) {
            if idx + 1 == parts.len() {
                parts[idx] = e;
                let mut coeff: u128 = 1;
                let mut cum = 0u64;
                for &w in parts.iter() {
                    cum += w as u64;
                    coeff *= binomial(cum, w as u64);
                }
                out.push((parts.clone(), BigInt::from(coeff)));
                return;
            }
            for w in 0..=e {
                parts[idx] = w;
                compositions(e - w, idx + 1, parts, out);
            }
        }
        compositions(gen.exponent, 0, &mut parts, &mut terms);

        for multiplier in monomials_of_degree(n, degree - gen.exponent) {
            let mut row = vec![BigInt::zero(); monomials.len()];
            for (parts, coeff) in &terms {
                let mut target = multiplier.clone();
                for (pos, &i) in support.iter().enumerate() {
                    target.set_exponent(i, target.exponent(i) + parts[pos]);
                }
                row[index[&target]] = coeff.clone();
            }
            rows.push(row);
        }
    }

    let mut matrix = IntMatrix::zeros(rows.len(), monomials.len());
    for (r, row) in rows.into_iter().enumerate() {
        for (c, value) in row.into_iter().enumerate() {
            if !value.is_zero() {
                matrix.set(r, c, value);
            }
        }
    }
    GradedPiece {
        degree,
        monomials,
        matrix,
    }
}

/// Dimension of the degree-`d` piece of the quotient by the ideal.
pub fn graded_dimension(ideal: &PowerIdeal, degree: u32) -> u64 {
    let piece = graded_piece(ideal, degree);
    (piece.monomials.len() - exact_rank(&piece.matrix)) as u64
}

/// Hilbert series of the quotient by the power ideal, one exact rank
/// computation per degree. Stops after the first vanishing coefficient
/// (later pieces of a quotient generated in degree one then vanish too).
pub fn hilbert_series(ideal: &PowerIdeal) -> HilbertSeries {
    hilbert_series_threaded(ideal, 1)
}

/// Same as [`hilbert_series`] but computing up to `threads` graded pieces
/// concurrently. Degrees past the first vanishing coefficient that were
/// already scheduled are discarded.
pub fn hilbert_series_threaded(ideal: &PowerIdeal, threads: usize) -> HilbertSeries {
    let threads = threads.max(1) as u32;
    let cap = ideal.degree_cap();
    let mut coeffs: Vec<u64> = Vec::new();
    let mut d = 0u32;
    'outer: while d <= cap {
        let hi = (d + threads).min(cap + 1);
        let batch: Vec<u64> = if hi - d == 1 {
            vec![graded_dimension(ideal, d)]
        } else {
            std::thread::scope(|scope| {
                let handles: Vec<_> = (d..hi)
                    .map(|deg| scope.spawn(move || graded_dimension(ideal, deg)))
                    .collect();
                handles.into_iter().map(|h| h.join().unwrap()).collect()
            })
        };
        for c in batch {
            coeffs.push(c);
            if c == 0 {
                break 'outer;
            }
        }
        d = hi;
    }
    HilbertSeries::from_coeffs(coeffs)
}

#![allow(dead_code)]

use std::path::PathBuf;

use num_rational::BigRational;
use num_traits::Zero;

use gparking::graph::RootedMultigraph;
use gparking::parking::ExponentVector;
use gparking::rank::IntMatrix;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn load_graph(name: &str) -> RootedMultigraph {
    gparking::io::read_graph_file(fixture(name)).unwrap()
}

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(fixture("golden").join(name)).unwrap()
}

pub fn ev(exponents: &[u32]) -> ExponentVector {
    ExponentVector::new(exponents.to_vec())
}

/// Unordered vertex pairs of the graph on `{0, …, n}`, in a fixed order.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect()
}

/// Builds the undirected multigraph with the given per-pair multiplicities,
/// or `None` if it is disconnected.
pub fn graph_from_mults(n: usize, mults: &[u32]) -> Option<RootedMultigraph> {
    let pairs = pair_list(n);
    assert_eq!(mults.len(), pairs.len());
    if !connected(n, &pairs, mults) {
        return None;
    }
    let edges: Vec<(usize, usize, u32)> = pairs
        .iter()
        .zip(mults)
        .filter(|(_, &m)| m > 0)
        .map(|(&(u, v), &m)| (u, v, m))
        .collect();
    Some(RootedMultigraph::undirected(n, &edges).unwrap())
}

/// Every connected undirected multigraph with `n ≤ 4` non-root vertices and
/// edge multiplicities at most 2, capped per `n` so the whole sweep holds
/// 202 graphs. Within each `n` graphs come in ascending (total multiplicity,
/// base-3 code) order, so the caps keep the sparsest graphs.
pub fn sweep_graphs() -> Vec<(String, RootedMultigraph)> {
    let caps = [2usize, 20, 90, 90];
    let mut all = Vec::new();
    for (index, &cap) in caps.iter().enumerate() {
        let n = index + 1;
        let pair_count = pair_list(n).len();
        let mut candidates: Vec<(u32, usize)> = Vec::new();
        for code in 0..3usize.pow(pair_count as u32) {
            let mults = decode_base3(code, pair_count);
            if graph_from_mults(n, &mults).is_some() {
                candidates.push((mults.iter().sum(), code));
            }
        }
        candidates.sort_unstable();
        for &(_, code) in candidates.iter().take(cap) {
            let g = graph_from_mults(n, &decode_base3(code, pair_count)).unwrap();
            all.push((format!("n{n}-{code}"), g));
        }
    }
    all
}

fn decode_base3(mut code: usize, len: usize) -> Vec<u32> {
    let mut digits = Vec::with_capacity(len);
    for _ in 0..len {
        digits.push((code % 3) as u32);
        code /= 3;
    }
    digits
}

fn connected(n: usize, pairs: &[(usize, usize)], mults: &[u32]) -> bool {
    let mut reached = vec![false; n + 1];
    reached[0] = true;
    let mut stack = vec![0usize];
    while let Some(u) = stack.pop() {
        for (&(a, b), &m) in pairs.iter().zip(mults) {
            if m == 0 {
                continue;
            }
            let other = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if !reached[other] {
                reached[other] = true;
                stack.push(other);
            }
        }
    }
    reached.iter().all(|&r| r)
}

/// Reference rank: straightforward Gauss-Jordan elimination over exact
/// rationals, kept independent of the fraction-free implementation.
pub fn naive_rational_rank(m: &IntMatrix) -> usize {
    let mut rows: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| BigRational::from_integer(m.get(r, c).clone()))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        let pivot_values = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] / &pivot;
                for (c, cell) in row.iter_mut().enumerate().skip(col) {
                    let delta = &pivot_values[c] * &factor;
                    *cell -= delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

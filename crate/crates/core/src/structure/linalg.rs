//! Exact rank and linear solves over the rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::{Coeff, Element, Word};

/// Outcome of an exact rank computation on a list of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub inputs: usize,
    /// Distinct words appearing in the inputs.
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Primitive integer relation `Σ c_i e_i = 0` when the inputs are dependent.
    pub dependency: Option<Vec<Coeff>>,
}

impl RankReport {
    pub fn independent(&self) -> bool {
        self.rank == self.inputs
    }
}

/// Coefficient matrix with one row per word and one column per element.
pub fn coefficient_matrix(elements: &[Element]) -> (Vec<Word>, Vec<Vec<Coeff>>) {
    let mut index: BTreeMap<&Word, usize> = BTreeMap::new();
    for e in elements {
        for w in e.words() {
            let next = index.len();
            index.entry(w).or_insert(next);
        }
    }
    let mut rows = vec![vec![Coeff::zero(); elements.len()]; index.len()];
    for (j, e) in elements.iter().enumerate() {
        for (w, c) in e.iter() {
            rows[index[w]][j] = c.clone();
        }
    }
    let mut words = vec![Word::empty(); index.len()];
    for (w, i) in index {
        words[i] = w.clone();
    }
    (words, rows)
}

/// Fraction-free (Bareiss) row echelon form of an integer matrix. Returns the
/// reduced matrix and the pivot columns.
pub fn bareiss_echelon(mut m: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in col + 1..ncols {
                let num = &m[r][col] * &m[i][j] - &m[i][col] * &m[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    (m, pivots)
}

/// Scales each column to integers; returns the integer matrix and the factors.
fn integer_columns(rows: &[Vec<Coeff>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let scales: Vec<BigInt> = (0..ncols)
        .map(|j| rows.iter().fold(BigInt::one(), |acc, r| acc.lcm(r[j].denom())))
        .collect();
    let ints = rows
        .iter()
        .map(|r| {
            r.iter()
                .zip(&scales)
                .map(|(c, s)| (c * Coeff::from_integer(s.clone())).to_integer())
                .collect()
        })
        .collect();
    (ints, scales)
}

/// Rank of a rational matrix given as rows.
pub fn rank_of_rows(rows: &[Vec<Coeff>], ncols: usize) -> usize {
    let (ints, _) = integer_columns(rows, ncols);
    bareiss_echelon(ints).1.len()
}

/// Scales a rational vector to coprime integers with a positive leading entry.
fn primitive(v: Vec<Coeff>) -> Vec<Coeff> {
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c * Coeff::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v;
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter()
        .map(|x| Coeff::from_integer(x / &gcd * &sign))
        .collect()
}

/// Exact rank of the span of `elements`, with a dependency witness when they
/// are not independent.
pub fn check_linear_independence(elements: &[Element]) -> Result<RankReport> {
    if elements.is_empty() {
        return Err(Error::EmptyInput);
    }
    let ncols = elements.len();
    let (words, rows) = coefficient_matrix(elements);
    let (ints, scales) = integer_columns(&rows, ncols);
    let (echelon, pivots) = bareiss_echelon(ints);
    let rank = pivots.len();
    let dependency = (rank < ncols).then(|| {
        let free = (0..ncols).find(|j| !pivots.contains(j)).expect("rank deficient");
        let mut x = vec![Coeff::zero(); ncols];
        x[free] = Coeff::one();
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let row = &echelon[r];
            let mut acc = Coeff::zero();
            for j in pc + 1..ncols {
                if !row[j].is_zero() {
                    acc += Coeff::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[pc] = -acc / Coeff::from_integer(row[pc].clone());
        }
        // undo the column scaling
        let x = x
            .into_iter()
            .zip(&scales)
            .map(|(c, s)| c * Coeff::from_integer(s.clone()))
            .collect();
        primitive(x)
    });
    Ok(RankReport {
        inputs: ncols,
        rows: words.len(),
        cols: ncols,
        rank,
        dependency,
    })
}

/// Solves `Σ x_i basis_i = target` exactly; `None` when `target` is outside
/// the span. Free variables are set to zero.
pub fn solve_in_span(basis: &[Element], target: &Element) -> Option<Vec<Coeff>> {
    let mut all = basis.to_vec();
    all.push(target.clone());
    let (_, mut m) = coefficient_matrix(&all);
    let n = basis.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Coeff::one() / &m[r][col];
        for c in m[r].iter_mut() {
            *c *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=n {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Coeff::zero(); n];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = m[i][n].clone();
    }
    Some(x)
}

/// `Σ x_i e_i`.
pub fn combine(elements: &[Element], coeffs: &[Coeff]) -> Element {
    let mut out = Element::zero();
    for (e, c) in elements.iter().zip(coeffs) {
        out.add_scaled(e, c);
    }
    out
}

//! Shuffles and mixable shuffles as explicit combinatorial objects.

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An `(m, n)`-shuffle encoded as the sequence of decks each output slot
/// draws from: `m` lefts and `n` rights.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShufflePattern {
    sides: Vec<Side>,
}

impl ShufflePattern {
    pub fn new(sides: Vec<Side>) -> Self {
        ShufflePattern { sides }
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn left_count(&self) -> usize {
        self.sides.iter().filter(|s| **s == Side::Left).count()
    }

    pub fn right_count(&self) -> usize {
        self.sides.len() - self.left_count()
    }

    /// The permutation `σ` with output slot `k` holding `u_{σ(k)}`, 1-based:
    /// left entries are `1..=m`, right entries `m+1..=m+n`.
    pub fn permutation(&self) -> Vec<usize> {
        let m = self.left_count();
        let (mut next_left, mut next_right) = (1, m + 1);
        self.sides
            .iter()
            .map(|s| match s {
                Side::Left => {
                    next_left += 1;
                    next_left - 1
                }
                Side::Right => {
                    next_right += 1;
                    next_right - 1
                }
            })
            .collect()
    }

    /// 0-based slots `k` such that `(k, k+1)` is an admissible pair, i.e. a
    /// left entry immediately followed by a right entry.
    pub fn admissible_pairs(&self) -> Vec<usize> {
        self.sides
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Side::Left && w[1] == Side::Right)
            .map(|(k, _)| k)
            .collect()
    }
}

/// A shuffle together with a set of admissible pairs to merge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixableShuffle {
    pub pattern: ShufflePattern,
    /// Increasing 0-based slots `k`; slot `k` merges with `k + 1`.
    pub merges: Vec<usize>,
}

/// All `(m, n)`-shuffles in lexicographic order with `Left < Right`.
pub fn enumerate_shuffles(m: usize, n: usize) -> Vec<ShufflePattern> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m + n);
    fill(m, n, &mut cur, &mut out);
    out
}

fn fill(m: usize, n: usize, cur: &mut Vec<Side>, out: &mut Vec<ShufflePattern>) {
    if m == 0 && n == 0 {
        out.push(ShufflePattern::new(cur.clone()));
        return;
    }
    if m > 0 {
        cur.push(Side::Left);
        fill(m - 1, n, cur, out);
        cur.pop();
    }
    if n > 0 {
        cur.push(Side::Right);
        fill(m, n - 1, cur, out);
        cur.pop();
    }
}

/// All mixable `(m, n)`-shuffles: patterns in [`enumerate_shuffles`] order,
/// and for each pattern the subsets of its admissible pairs in binary-counter
/// order (bit `i` selects the `i`-th admissible pair).
pub fn enumerate_mixable_shuffles(m: usize, n: usize) -> Vec<MixableShuffle> {
    let mut out = Vec::new();
    for pattern in enumerate_shuffles(m, n) {
        let admissible = pattern.admissible_pairs();
        for mask in 0u64..(1u64 << admissible.len()) {
            let merges = admissible
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, k)| *k)
                .collect();
            out.push(MixableShuffle {
                pattern: pattern.clone(),
                merges,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Side::{Left as L, Right as R};

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_shuffles(1, 1).len(), 2);
        assert_eq!(enumerate_shuffles(2, 1).len(), 3);
        assert_eq!(enumerate_shuffles(0, 4), vec![ShufflePattern::new(vec![R; 4])]);
        assert_eq!(enumerate_shuffles(0, 0).len(), 1);
    }

    #[test]
    fn lexicographic_order() {
        let got: Vec<_> = enumerate_shuffles(2, 1).into_iter().map(|p| p.sides).collect();
        assert_eq!(got, vec![vec![L, L, R], vec![L, R, L], vec![R, L, L]]);
    }

    #[test]
    fn mixable_counts() {
        // only LR has an admissible pair
        let ms = enumerate_mixable_shuffles(1, 1);
        assert_eq!(ms.len(), 3);
        assert_eq!(ms[1].merges, vec![0]);
        assert!(ms[2].merges.is_empty());
        // LLR, LRL carry one admissible pair each, RLL none
        assert_eq!(enumerate_mixable_shuffles(2, 1).len(), 5);
        assert_eq!(enumerate_mixable_shuffles(3, 0).len(), 1);
        assert!(enumerate_mixable_shuffles(3, 0)[0].merges.is_empty());
    }

    #[test]
    fn shuffle_count_is_binomial() {
        for m in 0..=8 {
            for n in 0..=(8 - m) {
                let pats = enumerate_shuffles(m, n);
                assert_eq!(pats.len(), binomial(m + n, m));
                let mut sorted = pats.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), pats.len());
            }
        }
    }

    #[test]
    fn mixable_count_matches_direct_enumeration() {
        // direct: every L/R sequence, every subset of slots that merges a left into a right
        for m in 0..=5usize {
            for n in 0..=(8 - m).min(5) {
                let mut direct = 0usize;
                for bits in 0u32..(1 << (m + n)) {
                    if bits.count_ones() as usize != n {
                        continue;
                    }
                    let sides: Vec<bool> = (0..m + n).map(|i| bits >> i & 1 == 1).collect();
                    let slots = m + n;
                    for t in 0u32..(1 << slots.saturating_sub(1)) {
                        let ok = (0..slots.saturating_sub(1))
                            .filter(|k| t >> k & 1 == 1)
                            .all(|k| !sides[k] && sides[k + 1]);
                        if ok {
                            direct += 1;
                        }
                    }
                }
                let via_sum: usize = enumerate_shuffles(m, n)
                    .iter()
                    .map(|p| 1usize << p.admissible_pairs().len())
                    .sum();
                assert_eq!(enumerate_mixable_shuffles(m, n).len(), direct, "({m},{n})");
                assert_eq!(via_sum, direct);
            }
        }
    }

    #[test]
    fn permutation_respects_deck_order() {
        for p in enumerate_shuffles(3, 2) {
            let sigma = p.permutation();
            let mut inverse = vec![0; sigma.len() + 1];
            for (k, &s) in sigma.iter().enumerate() {
                inverse[s] = k + 1;
            }
            assert!(inverse[1..=3].windows(2).all(|w| w[0] < w[1]));
            assert!(inverse[4..=5].windows(2).all(|w| w[0] < w[1]));
            for k in p.admissible_pairs() {
                assert!(sigma[k] <= 3 && 3 < sigma[k + 1]);
            }
        }
    }

    #[test]
    fn merges_never_exceed_min() {
        for m in 0..=4 {
            for n in 0..=4 {
                for ms in enumerate_mixable_shuffles(m, n) {
                    assert!(ms.merges.len() <= m.min(n));
                }
            }
        }
    }
}
